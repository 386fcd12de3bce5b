mod common;

use agt_core::{enclosing_irreducible, irreducible_colon, IrreducibleComponent, Monomial, MonomialIdeal};
use common::{components, monomial_ideal, primary_ideal, standard_monomials};
use proptest::prelude::*;

fn ideal_with_partner() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    primary_ideal(3, 4, 3).prop_flat_map(|i| {
        let n = i.nvars();
        (Just(i), monomial_ideal(n, 4, 3))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn triple_colon_is_single_colon((i, x) in ideal_with_partner()) {
        let once = i.colon_ideal(&x).unwrap();
        let thrice = i.colon_ideal(&i.colon_ideal(&once).unwrap()).unwrap();
        prop_assert_eq!(thrice, once);
    }

    #[test]
    fn colon_back_through_irreducible(i in primary_ideal(3, 4, 4), extra in prop::collection::vec(0u32..3, 3)) {
        let enc = enclosing_irreducible(&i).unwrap();
        let j = enc.enclosing.to_ideal();
        prop_assert_eq!(j.colon_ideal(&j.colon_ideal(&i).unwrap()).unwrap(), i.clone());
        // any larger box also works
        let t: Vec<u32> = enc.enclosing.exponents().iter().zip(&extra).map(|(a, b)| a + b).collect();
        let big = IrreducibleComponent::new(t).unwrap().to_ideal();
        prop_assert_eq!(big.colon_ideal(&big.colon_ideal(&i).unwrap()).unwrap(), i);
    }

    #[test]
    fn decomposition_is_exact_and_irredundant(i in primary_ideal(4, 4, 4)) {
        let comps = i.irreducible_decomposition().unwrap();
        prop_assert_eq!(MonomialIdeal::from_components(&comps).unwrap(), i.clone());
        for skip in 0..comps.len() {
            if comps.len() == 1 {
                break;
            }
            let rest: Vec<IrreducibleComponent> =
                comps.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, c)| c.clone()).collect();
            prop_assert_ne!(MonomialIdeal::from_components(&rest).unwrap(), i.clone());
        }
    }

    #[test]
    fn hilbert_function_sums_to_length(i in primary_ideal(4, 4, 3)) {
        let sm = i.standard_monomials().unwrap();
        prop_assert_eq!(i.hilbert_function().unwrap().iter().sum::<usize>(), sm.len());
        prop_assert_eq!(sm, standard_monomials(&i));
    }

    #[test]
    fn relabeling_commutes_with_decomposition(i in primary_ideal(3, 4, 3), rot in 0usize..3) {
        let n = i.nvars();
        let perm: Vec<usize> = (0..n).map(|k| (k + rot) % n).collect();
        let mut a: Vec<IrreducibleComponent> =
            i.irreducible_decomposition().unwrap().iter().map(|c| c.permuted(&perm)).collect();
        a.sort();
        prop_assert_eq!(a, i.permuted(&perm).irreducible_decomposition().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn irreducible_colon_matches_general_colon(pair in (1usize..=4).prop_flat_map(|n| components(n, 5, 2..=2))) {
        let (a, b) = (&pair[0], &pair[1]);
        prop_assert_eq!(irreducible_colon(a, b).unwrap(), a.to_ideal().colon_ideal(&b.to_ideal()).unwrap());
    }
}

#[test]
fn standard_examples() {
    let i = MonomialIdeal::from_exponents(2, &[&[3, 0], &[1, 2], &[0, 4]]).unwrap();
    assert_eq!(i.standard_monomials().unwrap().len(), 8);
    // 1 | x, y | x^2, xy, y^2 | x^2y, y^3
    assert_eq!(i.hilbert_function().unwrap(), vec![1, 2, 3, 2]);
    let m2 = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
    assert_eq!(m2.hilbert_function().unwrap(), vec![1, 2]);
    assert_eq!(Monomial::new(vec![1, 2]).to_string(), "x*y^2");
}
