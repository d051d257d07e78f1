//! Regression against the frozen reference values.

use pbounded::golden;
use pbounded::gs::{
    cup_power_pairing, gs_evaluate, zeta2_pairing, zeta4_pairing, zeta8_images, zeta8_pairing,
    zeta8_pairing_with,
};
use pbounded::perm::{permutations, sign};
use pbounded::thompson::{f, g, rank_four_images};

#[test]
fn fixture_lists_every_value() {
    let v = golden::values();
    for k in ["alpha_fg", "alpha_gf", "zeta2", "zeta4", "zeta8"] {
        assert!(v.contains_key(k), "{k}");
    }
    assert_ne!(v["zeta8"], 0);
}

#[test]
fn small_values_match() {
    assert_eq!(
        Some(gs_evaluate(&f(), &g()).unwrap()),
        golden::get("alpha_fg")
    );
    assert_eq!(
        Some(gs_evaluate(&g(), &f()).unwrap()),
        golden::get("alpha_gf")
    );
    assert_eq!(Some(zeta2_pairing().unwrap()), golden::get("zeta2"));
    assert_eq!(Some(zeta4_pairing().unwrap()), golden::get("zeta4"));
}

#[test]
fn zeta8_matches() {
    assert_eq!(Some(zeta8_pairing().unwrap()), golden::get("zeta8"));
}

#[test]
fn zeta8_under_reordering() {
    let z8 = golden::get("zeta8").unwrap();
    let base = rank_four_images();
    // Permuting the base permutes both halves of the eight images alike,
    // an even permutation of the images: the value is unchanged.
    let sigma = &permutations(4)[6];
    assert_eq!(sign(sigma), -1);
    let reordered: Vec<_> = sigma.iter().map(|&i| base[i].clone()).collect();
    assert_eq!(zeta8_pairing_with(&reordered).unwrap(), z8);

    // Swapping two of the eight images is odd: the value changes sign.
    let mut images = zeta8_images(&base);
    images.swap(0, 5);
    assert_eq!(cup_power_pairing(&images).unwrap(), -z8);
}

#[test]
fn zeta4_sign_follows_image_permutation() {
    let base = rank_four_images();
    for p in permutations(4) {
        let images: Vec<_> = p.iter().map(|&i| base[i].clone()).collect();
        assert_eq!(cup_power_pairing(&images).unwrap(), sign(&p) * 8, "{p:?}");
    }
}
