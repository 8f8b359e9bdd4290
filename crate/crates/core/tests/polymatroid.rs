mod common;

use common::{brute_force_polytope, random_submodular};
use msupp::polymatroid::{
    is_mconvex, linear_rank, msupp_from_rank, msupp_union, rank_from_support,
    validate_rank_function, ExchangeWitness, FieldSpec, RankFunction, SubspaceFamily, Violation,
};
use msupp::subset::Subset;
use msupp::support::Support;
use msupp::{Error, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn chain_rank() -> RankFunction {
    // bitmask order: ∅, {1}, {2}, {1,2}, {3}, {1,3}, {2,3}, {1,2,3}
    RankFunction::from_values(3, vec![0, 1, 2, 2, 3, 3, 3, 3]).unwrap()
}

fn chain_points() -> Vec<Vec<u32>> {
    vec![
        vec![0, 0, 3],
        vec![0, 1, 2],
        vec![0, 2, 1],
        vec![1, 0, 2],
        vec![1, 1, 1],
    ]
}

fn support(p: usize, pts: &[&[u32]]) -> Support {
    Support::new(p, pts.iter().map(|x| x.to_vec())).unwrap()
}

fn points(s: &Support) -> Vec<Vec<u32>> {
    s.points().cloned().collect()
}

fn q(v: &[i64]) -> Vec<Rational> {
    v.iter()
        .map(|&x| Rational::from_integer(x.into()))
        .collect()
}

#[test]
fn validate_examples() {
    let free = RankFunction::from_values(2, vec![0, 1, 1, 2]).unwrap();
    assert!(validate_rank_function(&free).valid);

    let bad = RankFunction::from_values(2, vec![0, 1, 1, 3]).unwrap();
    let report = validate_rank_function(&bad);
    assert!(!report.valid);
    let want = Violation::Submodularity {
        first: Subset::from_elements(&[1]),
        second: Subset::from_elements(&[2]),
        lhs: 3,
        rhs: 2,
    };
    assert_eq!(report.violations, vec![want]);

    let max = RankFunction::from_fn(3, |s| s.elements().max().unwrap_or(0) as u32).unwrap();
    assert!(validate_rank_function(&max).valid);
}

#[test]
fn missing_entries_rejected() {
    assert!(matches!(
        RankFunction::from_values(2, vec![0, 1, 1]),
        Err(Error::RankTableLength {
            p: 2,
            expected: 4,
            got: 3
        })
    ));
    let text = r#"{"p": 3, "values": [0, 1]}"#;
    assert!(serde_json::from_str::<RankFunction>(text).is_err());
}

#[test]
fn corrupted_tables_carry_true_witnesses() {
    let nonzero = RankFunction::from_values(2, vec![1, 1, 1, 2]).unwrap();
    let r = validate_rank_function(&nonzero);
    assert_eq!(r.violations[0], Violation::Normalization { value: 1 });

    let drop = RankFunction::from_values(2, vec![0, 2, 1, 1]).unwrap();
    let r = validate_rank_function(&drop);
    assert!(matches!(r.violations[0], Violation::Monotonicity { .. }));
    assert!(r.violations.iter().all(|v| v.holds_for(&drop)));
    assert!(r.violations.iter().all(|v| !v.holds_for(&chain_rank())));
    assert!(matches!(msupp_from_rank(&drop), Err(Error::InvalidRank(_))));
}

#[test]
fn msupp_examples() {
    assert_eq!(
        points(&msupp_from_rank(&chain_rank()).unwrap()),
        chain_points()
    );
    let single = RankFunction::from_values(1, vec![0, 4]).unwrap();
    assert_eq!(points(&msupp_from_rank(&single).unwrap()), vec![vec![4]]);
    let free = RankFunction::from_fn(3, |s| s.len() as u32).unwrap();
    assert_eq!(
        points(&msupp_from_rank(&free).unwrap()),
        vec![vec![1, 1, 1]]
    );
}

#[test]
fn mconvex_examples() {
    assert!(
        is_mconvex(&support(2, &[&[1, 2], &[2, 1]]))
            .unwrap()
            .mconvex
    );
    assert!(is_mconvex(&support(3, &[&[4, 0, 1]])).unwrap().mconvex);
    let r = is_mconvex(&support(2, &[&[2, 0], &[0, 2]])).unwrap();
    assert_eq!(
        r.witness,
        Some(ExchangeWitness {
            x: vec![0, 2],
            y: vec![2, 0],
            i: 2
        })
    );
    // points of different weight are not a support at all
    let mixed = Support::new(3, [vec![2, 0, 1], vec![0, 2, 1], vec![1, 1, 0]]);
    assert!(matches!(mixed, Err(Error::WeightMismatch { .. })));
    assert!(is_mconvex(&Support::empty(2)).is_err());
}

#[test]
fn rank_from_support_examples() {
    let r = rank_from_support(&support(2, &[&[1, 2], &[2, 1]])).unwrap();
    assert_eq!(r.values(), &[0, 2, 2, 3]);
    let chain = Support::new(3, chain_points()).unwrap();
    assert_eq!(rank_from_support(&chain).unwrap(), chain_rank());
    assert_eq!(
        rank_from_support(&support(2, &[&[3, 0]])).unwrap().values(),
        &[0, 3, 0, 3]
    );
    assert!(rank_from_support(&Support::empty(2)).is_err());
}

#[test]
fn linear_rank_examples() {
    let fam = SubspaceFamily::new(
        3,
        FieldSpec::Rational,
        vec![
            vec![q(&[1, 0, 0])],
            vec![q(&[1, 0, 0]), q(&[0, 1, 0])],
            vec![q(&[1, 0, 0]), q(&[0, 1, 0]), q(&[0, 0, 1])],
        ],
    )
    .unwrap();
    assert_eq!(linear_rank(&fam).unwrap(), chain_rank());

    let zero = SubspaceFamily::new(2, FieldSpec::Rational, vec![vec![], vec![], vec![]]).unwrap();
    assert!(linear_rank(&zero).unwrap().values().iter().all(|&v| v == 0));

    let same = SubspaceFamily::new(
        2,
        FieldSpec::Rational,
        vec![vec![q(&[1, 0])], vec![q(&[1, 0])]],
    )
    .unwrap();
    assert_eq!(linear_rank(&same).unwrap().values(), &[0, 1, 1, 1]);

    let ragged = SubspaceFamily::new(2, FieldSpec::Rational, vec![vec![q(&[1, 0, 0])]]);
    assert!(matches!(ragged, Err(Error::RaggedVectors { .. })));
}

#[test]
fn linear_rank_depends_on_characteristic() {
    let subspaces = vec![vec![q(&[1, 1])], vec![q(&[1, -1])]];
    let over_q = SubspaceFamily::new(2, FieldSpec::Rational, subspaces.clone()).unwrap();
    let over_f2 = SubspaceFamily::new(2, FieldSpec::Prime(2), subspaces).unwrap();
    assert_eq!(linear_rank(&over_q).unwrap().values(), &[0, 1, 1, 2]);
    assert_eq!(linear_rank(&over_f2).unwrap().values(), &[0, 1, 1, 1]);
    let json = r#"{"ambient": 2, "field": "Fp:4", "subspaces": [[[1, 0]]]}"#;
    assert!(serde_json::from_str::<SubspaceFamily>(json).is_err());
}

#[test]
fn union_examples() {
    let a = support(2, &[&[1, 0]]);
    let b = support(2, &[&[0, 1]]);
    assert_eq!(
        points(&msupp_union(&[a.clone(), b]).unwrap()),
        vec![vec![0, 1], vec![1, 0]]
    );
    assert_eq!(msupp_union(&[a.clone(), a.clone()]).unwrap(), a);
    let s1 = support(3, &[&[1, 1, 0]]);
    let s2 = support(3, &[&[2, 0, 0]]);
    let u = msupp_union(&[s1, s2]).unwrap();
    assert_eq!(points(&u), vec![vec![1, 1, 0], vec![2, 0, 0]]);
    // (2,0,0) -> (1,1,0) is a single exchange step, so this union happens to be M-convex
    assert!(is_mconvex(&u).unwrap().mconvex);
    assert!(msupp_union(&[a, support(2, &[&[2, 0]])]).is_err());
}

#[test]
fn random_rank_functions_agree_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..150 {
        let p = rng.gen_range(1..=6);
        let r = random_submodular(&mut rng, p);
        let fast: Vec<Vec<u32>> = points(&msupp_from_rank(&r).unwrap());
        let slow: Vec<Vec<u32>> = brute_force_polytope(&r).into_iter().collect();
        assert_eq!(fast, slow, "rank table {:?}", r.values());
    }
}

#[test]
fn json_shapes() {
    let r = chain_rank();
    assert_eq!(
        serde_json::to_string(&r).unwrap(),
        r#"{"p":3,"values":[0,1,2,2,3,3,3,3]}"#
    );
    let s = Support::new(3, chain_points()).unwrap();
    let text = serde_json::to_string(&s).unwrap();
    assert_eq!(
        text,
        r#"{"p":3,"points":[[0,0,3],[0,1,2],[0,2,1],[1,0,2],[1,1,1]]}"#
    );
    assert_eq!(serde_json::from_str::<Support>(&text).unwrap(), s);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polymatroid_points_are_mconvex_and_recover_rank(seed in any::<u64>(), p in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = random_submodular(&mut rng, p);
        prop_assert!(validate_rank_function(&r).valid);
        let s = msupp_from_rank(&r).unwrap();
        prop_assert!(!s.is_empty());
        prop_assert!(is_mconvex(&s).unwrap().mconvex);
        prop_assert_eq!(rank_from_support(&s).unwrap(), r);
    }

    #[test]
    fn linear_rank_is_a_rank_function(
        vecs in prop::collection::vec(prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 0..3), 1..5),
        prime in prop::sample::select(vec![0u64, 2, 3, 5]),
    ) {
        let subspaces = vecs.iter().map(|vs| vs.iter().map(|v| q(v)).collect()).collect();
        let field = if prime == 0 { FieldSpec::Rational } else { FieldSpec::Prime(prime) };
        let fam = SubspaceFamily::new(3, field, subspaces).unwrap();
        let r = linear_rank(&fam).unwrap();
        prop_assert!(validate_rank_function(&r).valid);
        prop_assert!(r.total() <= 3);
    }
}
