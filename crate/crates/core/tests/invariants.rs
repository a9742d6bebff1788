mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use qhalg::linalg::rank_of;
use qhalg::modules::{decomposition_matrix, pairing_check, structural_checks};
use qhalg::{BasedAlgebra, GradedDim, Parity};

use common::{catalog_entry, rescaled, CATALOG_SIZE};

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 256,
        ..ProptestConfig::default()
    }
}

fn sample() -> impl Strategy<Value = BasedAlgebra> {
    (0..CATALOG_SIZE, prop::collection::vec(1i64..7, 1..6)).prop_map(|(k, scales)| {
        let entry = catalog_entry(k);
        rescaled(&entry.based, &scales)
    })
}

fn upper_set(b: &BasedAlgebra, mask: u32) -> BTreeSet<usize> {
    let gens: Vec<usize> = (0..b.poset().len()).filter(|i| mask & (1 << i) != 0).collect();
    b.poset().upper_closure(&gens).0
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn gram_is_one_on_initial_elements(b in sample(), pick in any::<usize>()) {
        let i = pick % b.poset().len();
        let g = b.gram_form(i).unwrap();
        let c = b.data().cell(i);
        prop_assert!(g.get(c.initial_y(), c.initial).is_one());
    }

    #[test]
    fn gram_vanishes_off_degree_zero(b in sample(), pick in any::<usize>()) {
        let i = pick % b.poset().len();
        let g = b.gram_form(i).unwrap();
        let alg = b.algebra();
        let c = b.data().cell(i);
        for (r, y) in c.y.iter().enumerate() {
            for (s, x) in c.x.iter().enumerate() {
                let d = alg.homogeneous_degree(y).unwrap() + alg.homogeneous_degree(x).unwrap();
                if d.q != 0 || d.parity != Parity::Even {
                    prop_assert!(g.get(r, s).is_zero());
                }
            }
        }
    }

    #[test]
    fn initial_idempotents_are_orthogonal(b in sample()) {
        let alg = b.algebra();
        for i in 0..b.poset().len() {
            for j in 0..b.poset().len() {
                let p = alg.mul(b.data().initial(i), b.data().initial(j));
                if i == j {
                    prop_assert_eq!(&p, b.data().initial(i));
                } else {
                    prop_assert!(p.is_zero());
                }
            }
        }
    }

    #[test]
    fn cell_ideal_containments(b in sample(), m1 in any::<u32>(), m2 in any::<u32>()) {
        let (o, t) = (upper_set(&b, m1), upper_set(&b, m2));
        let alg = b.algebra();
        let io = b.cell_ideal(&o).unwrap();
        let it = b.cell_ideal(&t).unwrap();
        let meet: BTreeSet<usize> = o.intersection(&t).copied().collect();
        let im = b.cell_ideal(&meet).unwrap();
        let vecs = |els: &[qhalg::AlgebraElement]| els.iter().map(|v| alg.to_vector(v)).collect::<Vec<_>>();
        let rank = |v: &[qhalg::linalg::Vector]| rank_of(alg.field(), alg.dim(), v);
        let (vo, vt, vm) = (vecs(&io.elements), vecs(&it.elements), vecs(&im.elements));
        let contained = rank(&[vo.clone(), vt.clone()].concat()) == vt.len();
        prop_assert_eq!(contained, o.is_subset(&t));
        let intersection = vo.len() + vt.len() - rank(&[vo.clone(), vt.clone()].concat());
        prop_assert_eq!(intersection, vm.len());
        prop_assert_eq!(rank(&[vo.clone(), vm.clone()].concat()), vo.len());
        for u in &io.elements {
            for v in &it.elements {
                let mut with = vm.clone();
                with.push(alg.to_vector(&alg.mul(u, v)));
                prop_assert_eq!(rank(&with), vm.len());
            }
        }
    }

    #[test]
    fn pairing_is_adjoint(b in sample(), pick in any::<usize>()) {
        let i = pick % b.poset().len();
        let g = b.gram_form(i).unwrap();
        let r = pairing_check(&b, i, &g);
        prop_assert!(r.passed, "{:?}", r.witness);
    }

    #[test]
    fn standard_modules_have_trivial_endomorphisms(b in sample(), pick in any::<usize>()) {
        let i = pick % b.poset().len();
        prop_assert_eq!(structural_checks(&b, i).end_dim, 1);
    }

    #[test]
    fn cell_layers_add_up(b in sample()) {
        let total: GradedDim = (0..b.poset().len())
            .map(|i| &b.standard_graded_dim(i) * &b.costandard_graded_dim(i))
            .sum();
        prop_assert_eq!(total, b.algebra().graded_dimension());
        for i in 0..b.poset().len() {
            prop_assert!(structural_checks(&b, i).passed());
        }
    }

    #[test]
    fn decomposition_is_unitriangular(b in sample()) {
        let d = decomposition_matrix(&b).unwrap();
        let ext = b.poset().linear_extension();
        for (r, row) in d.entries.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                prop_assert!(entry.has_nonnegative_coefficients());
                if r == c {
                    prop_assert!(entry.is_one());
                } else if !entry.is_zero() {
                    prop_assert!(b.poset().lt(ext[c], ext[r]));
                }
            }
        }
    }
}
