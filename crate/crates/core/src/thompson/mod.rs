//! Thompson's group `F` as piecewise-linear homeomorphisms of `[0,1]`.

mod dyadic;
mod expr;
mod plmap;

pub use dyadic::Dyadic;
pub use expr::parse_element;
pub use plmap::{is_in_f, is_in_f_prime, PLMap};

use rand::Rng;

fn pts(coords: &[(i64, i64)], denom: u32) -> Vec<(Dyadic, Dyadic)> {
    coords
        .iter()
        .map(|&(x, y)| (Dyadic::new(x, denom), Dyadic::new(y, denom)))
        .collect()
}

/// Supported on `[1/8, 1/2]`: through `(1/8,1/8)`, `(3/8,2/8)`, `(4/8,4/8)`.
pub fn f() -> PLMap {
    PLMap::from_points(pts(&[(0, 0), (1, 1), (3, 2), (4, 4), (8, 8)], 3))
        .expect("f is a valid element of F")
}

/// Supported on `[1/2, 7/8]`: through `(4/8,4/8)`, `(5/8,6/8)`, `(7/8,7/8)`.
pub fn g() -> PLMap {
    PLMap::from_points(pts(&[(0, 0), (4, 4), (5, 6), (7, 7), (8, 8)], 3))
        .expect("g is a valid element of F")
}

/// The four commuting images `f*1, g*1, 1*f, 1*g`.
pub fn rank_four_images() -> [PLMap; 4] {
    let id = PLMap::identity();
    [f().star(&id), g().star(&id), id.star(&f()), id.star(&g())]
}

/// Doubles a commuting family: `[w_1*1, .., w_k*1, 1*w_1, .., 1*w_k]`.
pub fn star_double(images: &[PLMap]) -> Vec<PLMap> {
    let id = PLMap::identity();
    images
        .iter()
        .map(|w| w.star(&id))
        .chain(images.iter().map(|w| id.star(w)))
        .collect()
}

/// A product of `len` letters drawn uniformly from the generators and their
/// inverses. `len` itself is uniform in `1..=max_len`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, generators: &[PLMap], max_len: usize) -> PLMap {
    let len = rng.gen_range(1..=max_len);
    (0..len).fold(PLMap::identity(), |acc, _| {
        let letter = &generators[rng.gen_range(0..generators.len())];
        if rng.gen_bool(0.5) {
            acc.compose(letter)
        } else {
            acc.compose(&letter.inverse())
        }
    })
}
