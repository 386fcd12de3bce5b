mod common;

use agt_core::canonical::{condition1, trace_ideal};
use agt_core::classify::{
    condition2_monomial, generator_colon_conditions, variable_colon_check, witness_map, component_condition, typethree_classify,
    typetwo_classify, typetwo_criterion, validate_witnesses, Condition2Params,
};
use agt_core::{CanonicalModule, FiniteAlgebra, IrreducibleComponent, Monomial, MonomialIdeal, PrimeField};
use common::components;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn irredundant(c: &[IrreducibleComponent]) -> bool {
    (0..c.len()).all(|i| (0..c.len()).all(|j| i == j || !c[i].is_contained_in(&c[j])))
}

fn decomposition(n: std::ops::RangeInclusive<usize>, max: u32, t: usize) -> impl Strategy<Value = Vec<IrreducibleComponent>> {
    n.prop_flat_map(move |n| components(n, max, t..=t)).prop_filter("irredundant", |c| irredundant(c))
}

fn comp(e: &[u32]) -> IrreducibleComponent {
    IrreducibleComponent::new(e.to_vec()).unwrap()
}

fn relabel(c: &[IrreducibleComponent], perm: &[usize], rot: usize) -> Vec<IrreducibleComponent> {
    let mut out: Vec<IrreducibleComponent> = c.iter().map(|x| x.permuted(perm)).collect();
    let len = out.len();
    out.rotate_left(rot % len);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn typetwo_case_is_relabeling_stable(c in decomposition(2..=4, 4, 2), perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle()) {
        let n = c[0].nvars();
        let perm: Vec<usize> = perm.into_iter().filter(|&k| k < n).collect();
        let moved = relabel(&c, &perm, 1);
        let case = |c: &[IrreducibleComponent]| typetwo_classify(&c[0], &c[1]).unwrap().map(|m| m.case);
        prop_assert_eq!(case(&c), case(&moved));
        prop_assert_eq!(typetwo_criterion(&c[0], &c[1]).unwrap(), case(&c).is_some());
    }

    #[test]
    fn typethree_case_is_relabeling_stable(c in decomposition(2..=4, 3, 3), perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle(), rot in 0usize..3) {
        let n = c[0].nvars();
        let perm: Vec<usize> = perm.into_iter().filter(|&k| k < n).collect();
        let case = |c: &[IrreducibleComponent]| typethree_classify(c).unwrap().map(|m| m.case);
        prop_assert_eq!(case(&c), case(&relabel(&c, &perm, rot)));
    }

    #[test]
    fn necessary_conditions_hold(c in (2..=3usize).prop_flat_map(|t| decomposition(2..=3, 3, t)), seed in any::<u64>()) {
        let i = MonomialIdeal::from_components(&c).unwrap();
        let a = FiniteAlgebra::new(&i, PrimeField::default()).unwrap();
        let comps = i.irreducible_decomposition().unwrap();
        let w = CanonicalModule::new(&a).unwrap();
        let dual = w.dual(&a).unwrap();
        let c1 = condition1(&a, &trace_ideal(&a, &dual));
        let c2 = condition2_monomial(&a, &Condition2Params::default(), &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        if c2.holds {
            for k in 0..comps.len() {
                prop_assert!(component_condition(&comps, k).unwrap());
            }
        }
        if c1 {
            prop_assert_eq!(generator_colon_conditions(&comps).unwrap(), (true, true));
        }
        if comps.len() == 3 {
            prop_assert!(variable_colon_check(&i, &comps).unwrap().iter().all(|e| e.holds()));
        }
        let taut: Vec<Option<Monomial>> = w.enclosing().f.iter().cloned().map(Some).collect();
        prop_assert!(witness_map(&a, &w, &dual, &taut).is_ok());
    }
}

#[test]
fn case_two_witnesses_from_the_example() {
    // J1 = (x^2, y^3, z^2), J2 = (x^3, y, z), J3 = (x, y^4, z): a = 2, b = 3, c_3 = 2
    let comps = vec![comp(&[2, 3, 2]), comp(&[3, 1, 1]), comp(&[1, 4, 1])];
    let i = MonomialIdeal::from_components(&comps).unwrap();
    let a = FiniteAlgebra::new(&i, PrimeField::default()).unwrap();
    let w = CanonicalModule::new(&a).unwrap();
    let dual = w.dual(&a).unwrap();
    let sorted = i.irreducible_decomposition().unwrap();
    let m = typethree_classify(&sorted).unwrap().unwrap();
    assert_eq!((m.case, m.matches.as_slice()), (2, &[2u8][..]));
    let (maps, covered) = validate_witnesses(&a, &w, &dual, &m.witnesses).unwrap();
    assert!(covered);
    assert_eq!(maps.len(), 3);
    assert!(condition1(&a, &trace_ideal(&a, &dual)));
}

#[test]
fn case_three_and_no_match() {
    let c3 = [comp(&[2, 4, 1]), comp(&[3, 3, 1]), comp(&[1, 1, 2])];
    assert_eq!(typethree_classify(&c3).unwrap().unwrap().case, 3);
    let none = [comp(&[1, 3]), comp(&[2, 2]), comp(&[3, 1])];
    assert!(typethree_classify(&none).unwrap().is_none());
    let i = MonomialIdeal::from_components(&none).unwrap();
    let a = FiniteAlgebra::new(&i, PrimeField::default()).unwrap();
    let dual = CanonicalModule::new(&a).unwrap().dual(&a).unwrap();
    assert!(!condition1(&a, &trace_ideal(&a, &dual)));
}

#[test]
fn split_variables_are_recorded() {
    // the last variable has exponent one everywhere
    let c = [comp(&[2, 4, 1, 1]), comp(&[3, 3, 1, 1]), comp(&[1, 1, 2, 1])];
    let m = typethree_classify(&c).unwrap().unwrap();
    assert_eq!((m.case, m.omitted), (3, vec![3]));
}
