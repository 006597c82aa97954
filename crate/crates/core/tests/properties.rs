use std::collections::{BTreeSet, HashSet};
use std::path::Path;

use fusionrep::jobspec::{Job, JobSpec};
use fusionrep::run::analyze;
use proptest::prelude::*;

type Map = Box<dyn Fn(&(usize, usize)) -> (usize, usize)>;

fn build(text: &str) -> Job {
    Job::build(JobSpec::parse(text).unwrap(), Path::new(".")).unwrap()
}

fn cycles(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        let mut c = vec![s + 1];
        seen[s] = true;
        let mut x = p[s];
        while x != s {
            seen[x] = true;
            c.push(x + 1);
            x = p[x];
        }
        let body: Vec<String> = c.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    out
}

fn closure_order(gens: &[Vec<usize>]) -> usize {
    let id: Vec<usize> = (0..gens[0].len()).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.len()
}

fn orbits<T: Clone + Ord>(points: Vec<T>, maps: &[&dyn Fn(&T) -> T]) -> Vec<usize> {
    let mut left: BTreeSet<T> = points.into_iter().collect();
    let mut sizes = Vec::new();
    while let Some(start) = left.pop_first() {
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            for f in maps {
                let y = f(&orbit[i]);
                if left.remove(&y) {
                    orbit.push(y);
                }
            }
            i += 1;
        }
        sizes.push(orbit.len());
    }
    sizes.sort();
    sizes
}

fn permutation(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_filter("non-identity", |p| {
            p.iter().enumerate().any(|(i, &x)| i != x)
        })
}

fn perm_job() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (2usize..=6).prop_flat_map(|d| (Just(d), prop::collection::vec(permutation(d), 1..=3)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn job_text_round_trips((degree, gens) in perm_job(), k in 1u32..4) {
        let gens_text: Vec<String> = gens.iter().map(|g| cycles(g)).collect();
        let text = format!(
            "[group]\ndegree = {degree}\ngenerators = {}\n[options]\nk = {k}\nhilbert_cap = 5000\n",
            gens_text.join("; ")
        );
        let spec = JobSpec::parse(&text).unwrap();
        prop_assert_eq!(&JobSpec::parse(&spec.to_string()).unwrap(), &spec);
        let job = Job::build(spec, Path::new(".")).unwrap();
        prop_assert_eq!(job.group.order(), closure_order(&gens));
    }

    #[test]
    fn cyclic_invariants_are_orbit_sums(p in prop::sample::select(vec![2usize, 3, 5]), n in 1u32..=2, r in 1usize..25) {
        let order = p.pow(n);
        prop_assume!(r % p != 0);
        let cycle: Vec<String> = (1..=order).map(|i| i.to_string()).collect();
        let text = format!(
            "[group]\ndegree = {order}\ngenerators = ({})\nnames = g\n[fusion]\nhom = g -> g^{r}\n",
            cycle.join(" ")
        );
        let a = analyze(&build(&text)).unwrap();
        let mut degrees = a.basis.degrees.clone();
        degrees.sort();
        let mul = |x: &usize| x * r % order;
        let expected: Vec<i64> = orbits((0..order).collect(), &[&mul]).into_iter().map(|s| s as i64).collect();
        prop_assert_eq!(degrees, expected);
        for e in &a.basis.elements {
            prop_assert!(e.iter().all(|&m| m == 0 || m == 1));
        }
        let covered: Vec<i64> = (0..order).map(|i| a.basis.elements.iter().map(|e| e[i]).sum()).collect();
        prop_assert!(covered.iter().all(|&c| c == 1));
    }

    #[test]
    fn elementary_abelian_invariants(
        p in prop::sample::select(vec![2usize, 3]),
        mats in prop::collection::vec(prop::array::uniform4(0usize..3), 1..=2),
    ) {
        let mats: Vec<[usize; 4]> = mats.into_iter().map(|m| m.map(|x| x % p)).collect();
        prop_assume!(mats.iter().all(|m| (m[0] * m[3] + p * p - m[1] * m[2]) % p != 0));
        let a_cycle: Vec<String> = (1..=p).map(|i| i.to_string()).collect();
        let b_cycle: Vec<String> = (p + 1..=2 * p).map(|i| i.to_string()).collect();
        let mut text = format!(
            "[group]\ndegree = {}\ngenerators = ({}); ({})\nnames = a, b\n[fusion]\n",
            2 * p,
            a_cycle.join(" "),
            b_cycle.join(" ")
        );
        for m in &mats {
            text.push_str(&format!("hom = a, b -> a^{}*b^{}, a^{}*b^{}\n", m[0], m[2], m[1], m[3]));
        }
        let job = build(&text);
        let a = analyze(&job).unwrap();
        let maps: Vec<Map> = mats
            .iter()
            .map(|&m| {
                Box::new(move |&(x, y): &(usize, usize)| ((x * m[0] + y * m[1]) % p, (x * m[2] + y * m[3]) % p))
                    as Map
            })
            .collect();
        let refs: Vec<_> = maps.iter().map(|f| f.as_ref()).collect();
        let points: Vec<(usize, usize)> = (0..p).flat_map(|x| (0..p).map(move |y| (x, y))).collect();
        let expected = orbits(points, &refs);
        prop_assert_eq!(a.basis.len(), expected.len());
        prop_assert_eq!(job.fusion.element_classes().len(), expected.len());
        prop_assert_eq!(a.basis.degrees.iter().sum::<i64>(), (p * p) as i64);
        prop_assert_eq!(a.presentation.names.len(), expected.len() - 1);
    }
}
