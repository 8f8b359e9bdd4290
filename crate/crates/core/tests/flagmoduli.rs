mod common;

use common::{all_compositions, brute_force_polytope, catalan};
use msupp::flagmoduli::{
    flag_comparison, flag_msupp, flag_rank_function, flag_simple_inequalities, m0n_msupp,
    m0n_prefix_enumeration, FlagReading,
};
use msupp::polymatroid::{is_mconvex, validate_rank_function};
use msupp::subset::Subset;
use num_bigint::BigInt;

/// `Σ_{i<j} d_i d_j` by the double sum.
fn s_of(p: usize, j: Subset) -> u32 {
    if j.is_empty() {
        return 0;
    }
    let mut cuts = vec![0u32];
    cuts.extend(j.elements().map(|x| x as u32));
    cuts.push(p as u32 + 1);
    let d: Vec<u32> = cuts.windows(2).map(|w| w[1] - w[0]).collect();
    let mut s = 0;
    for a in 0..d.len() {
        for b in a + 1..d.len() {
            s += d[a] * d[b];
        }
    }
    s
}

#[test]
fn flag_rank_is_the_partial_flag_dimension() {
    for p in 1..=8 {
        let r = flag_rank_function(p).unwrap();
        assert!(validate_rank_function(&r).valid);
        for j in Subset::all(p) {
            assert_eq!(r.get(j), s_of(p, j), "p = {p}, J = {j:?}");
        }
    }
}

#[test]
fn flag_support_matches_all_subset_inequalities() {
    for p in 1..=6 {
        let s = flag_msupp(p).unwrap();
        let brute: Vec<Vec<u32>> = brute_force_polytope(&flag_rank_function(p).unwrap())
            .into_iter()
            .collect();
        assert_eq!(s.points().cloned().collect::<Vec<_>>(), brute, "p = {p}");
        assert!(is_mconvex(&s).unwrap().mconvex);
    }
    let two: Vec<Vec<u32>> = flag_msupp(2).unwrap().points().cloned().collect();
    assert_eq!(two, vec![vec![1, 2], vec![2, 1]]);
}

#[test]
fn literal_display_examples() {
    assert!(!flag_simple_inequalities(2, &[1, 2]).unwrap());
    assert!(!flag_simple_inequalities(2, &[2, 1]).unwrap());
    // k = 1 bound is p - 1 = 0 < 1
    assert!(!flag_simple_inequalities(1, &[1]).unwrap());
    assert!(!flag_simple_inequalities(3, &[1, 2, 3]).unwrap());
    assert!(flag_msupp(3).unwrap().contains(&[1, 2, 3]));
}

#[test]
fn comparator_reports_every_reading() {
    for p in 1..=6 {
        let c = flag_comparison(p).unwrap();
        assert_eq!(c.rank_route, flag_msupp(p).unwrap());
        let weight = (p * (p + 1) / 2) as u32;
        for r in &c.readings {
            // the two difference lists partition the symmetric difference
            let all = all_compositions(weight, p);
            let shown = all
                .iter()
                .filter(|n| msupp::flagmoduli::flag_display_inequalities(p, n, r.reading).unwrap())
                .count();
            assert_eq!(r.accepted, shown);
            assert_eq!(
                r.agrees,
                r.only_rank_route.is_empty() && r.only_display.is_empty()
            );
            assert!(r.only_rank_route.iter().all(|n| c.rank_route.contains(n)));
            assert!(r.only_display.iter().all(|n| !c.rank_route.contains(n)));
        }
        let literal = c
            .readings
            .iter()
            .find(|r| r.reading == FlagReading::Literal)
            .unwrap();
        assert!(
            !literal.agrees,
            "literal display never admits n_p >= 1 at p = {p}"
        );
    }
}

#[test]
fn m0n_examples() {
    let three: Vec<Vec<u32>> = m0n_msupp(3).unwrap().points().cloned().collect();
    assert_eq!(
        three,
        vec![
            vec![0, 0, 3],
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 1, 1]
        ]
    );
    assert_eq!(
        m0n_msupp(1).unwrap().points().cloned().collect::<Vec<_>>(),
        vec![vec![1]]
    );
}

#[test]
fn m0n_counts_are_catalan() {
    let c = catalan(10);
    for (p, want) in c.iter().enumerate().skip(1) {
        assert_eq!(BigInt::from(m0n_msupp(p).unwrap().len()), *want, "p = {p}");
    }
    let listed: Vec<u64> = vec![1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
    assert_eq!(
        c[1..]
            .iter()
            .map(|x| u64::try_from(x).unwrap())
            .collect::<Vec<_>>(),
        listed
    );
    for p in 1..=8 {
        assert_eq!(m0n_msupp(p).unwrap(), m0n_prefix_enumeration(p).unwrap());
    }
}
