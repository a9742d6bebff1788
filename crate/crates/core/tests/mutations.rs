mod common;

use proptest::prelude::*;
use qhalg::heredity::AntiInvolution;

use common::{catalog_entry, mutate, rejection, rescaled, ALL, CATALOG_SIZE};

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 512,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn mutated_heredity_data_is_rejected(
        k in 0..CATALOG_SIZE,
        scales in prop::collection::vec(1i64..7, 1..5),
        which in 0..ALL.len(),
        r in any::<usize>(),
    ) {
        let b = rescaled(&catalog_entry(k).based, &scales);
        let witness = rejection(mutate(&b, ALL[which], r));
        prop_assert!(witness.as_deref().is_some_and(|w| !w.is_empty()), "{:?} accepted", ALL[which]);
    }

    #[test]
    fn corrupted_involutions_are_rejected(k in 0..CATALOG_SIZE, r in any::<usize>()) {
        let entry = catalog_entry(k);
        let Some(tau) = entry.involution.clone() else { return Ok(()); };
        let field = entry.algebra().field();
        let mut images = tau.images;
        let at = r % images.len();
        images[at] = images[at].scale(&field.from_i64(2));
        let report = entry.based.verify_anti_involution(&AntiInvolution::new(images)).unwrap();
        prop_assert!(!(report.anti_multiplicative && report.involutive));
        prop_assert!(report.witness.is_some());
    }

    #[test]
    fn unmutated_rescalings_are_accepted(
        k in 0..CATALOG_SIZE,
        scales in prop::collection::vec(1i64..7, 1..5),
    ) {
        let b = rescaled(&catalog_entry(k).based, &scales);
        let (alg, data) = b.into_parts();
        prop_assert!(rejection(Ok((alg, data))).is_none());
    }
}

#[test]
fn every_mutation_kind_is_exercised_on_every_catalog_entry() {
    for k in 0..CATALOG_SIZE {
        let b = catalog_entry(k).based;
        for m in ALL {
            for r in 0..6 {
                assert!(rejection(mutate(&b, m, r)).is_some(), "{m:?} accepted on entry {k}, r = {r}");
            }
        }
    }
}
