//! The Ghys-Sergiescu 2-cocycle on `F'`.
//!
//! For `a, b ∈ F'` write `v_h(x) = (log₂ h'_L(x), log₂ h'_R(x))`. Then
//!
//! ```text
//! α(a, b) = Σ_x det [ v_{a∘b}(x) | v_b(x) ]
//! ```
//!
//! with the two vectors as columns, summed over the breakpoints of `b` and of
//! `a∘b`. At any other `x` both columns are constant across `x`, so the
//! determinant vanishes there and the domain is not a convention.
//!
//! Orientation: the columns are ordered `(a∘b, b)`. The opposite order gives
//! the negated cocycle; with this one `α(f, g) = 1` for the standard `f, g`.
//! Even cup powers do not see the choice.

use num_traits::ToPrimitive;

use crate::bar::{cup_power, pair, pullback, zeta, Chain, Cochain};
use crate::error::{Error, Result};
use crate::group::{homomorphism_from_generators, make_free_abelian, FPrime};
use crate::rational::{rat, to_i64, Rational};
use crate::thompson::{f, g, rank_four_images, star_double, Dyadic, PLMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contribution {
    pub x: Dyadic,
    pub det: i64,
}

fn ensure_f_prime(m: &PLMap, which: &str) -> Result<()> {
    if m.is_in_f_prime() {
        Ok(())
    } else {
        Err(Error::NotInFPrime(format!("{which} = {m}")))
    }
}

/// Per-breakpoint determinants of `α(a, b)`, in increasing `x`, zeros
/// included.
pub fn gs_contributions(a: &PLMap, b: &PLMap) -> Result<Vec<Contribution>> {
    ensure_f_prime(a, "first argument")?;
    ensure_f_prime(b, "second argument")?;
    let ab = a.compose(b);
    let mut xs: Vec<Dyadic> = b.breakpoints().chain(ab.breakpoints()).cloned().collect();
    xs.sort();
    xs.dedup();
    Ok(xs
        .into_iter()
        .map(|x| {
            let (bl, br) = (b.left_slope_log2(&x), b.right_slope_log2(&x));
            let (abl, abr) = (ab.left_slope_log2(&x), ab.right_slope_log2(&x));
            Contribution {
                det: abl * br - abr * bl,
                x,
            }
        })
        .collect())
}

pub fn gs_evaluate(a: &PLMap, b: &PLMap) -> Result<i64> {
    Ok(gs_contributions(a, b)?.iter().map(|c| c.det).sum())
}

/// `α` as a memoized degree-2 cochain on `F'`.
///
/// # Panics
///
/// When evaluated on a map outside `F'`.
pub fn gs_cochain() -> Cochain<PLMap> {
    Cochain::new(2, |t: &[PLMap]| {
        rat(gs_evaluate(&t[0], &t[1]).expect("GS cocycle evaluated outside F'"))
    })
    .memoized()
}

/// `⟨ψ*(α^{m/2}), ζ_m⟩` for `ψ: ℤ^m → F'` given by commuting `images`.
pub fn cup_power_pairing(images: &[PLMap]) -> Result<i64> {
    let cycle = zeta(images.len())?;
    let value = pair_cup_power(images, &cycle)?;
    Ok(to_i64(&value).expect("pairing of integer cochains with an integer chain"))
}

/// `⟨ψ*(α^{m/2}), c⟩` for an arbitrary degree-`m` chain `c` on `ℤ^m`, `m` even.
pub fn pair_cup_power(images: &[PLMap], chain: &Chain<Vec<i64>>) -> Result<Rational> {
    let m = images.len();
    if m == 0 || m % 2 == 1 {
        return Err(Error::ZetaOutOfRange(m));
    }
    for (i, w) in images.iter().enumerate() {
        ensure_f_prime(w, &format!("image {i}"))?;
    }
    if let Some((_, t)) = chain.terms().find(|(_, t)| t.iter().any(|v| v.len() != m)) {
        return Err(Error::ArityMismatch {
            expected: m,
            got: t.iter().map(Vec::len).find(|&l| l != m).unwrap_or(m),
        });
    }
    let z = make_free_abelian(m)?;
    let psi = homomorphism_from_generators(&z, images.to_vec(), &FPrime)?;
    let alpha = pullback(&gs_cochain(), &psi).memoized();
    pair(&cup_power(&alpha, m / 2), chain)
}

pub fn zeta2_pairing() -> Result<i64> {
    cup_power_pairing(&[f(), g()])
}

pub fn zeta4_pairing() -> Result<i64> {
    cup_power_pairing(&rank_four_images())
}

/// The eight images `[w*1 …, 1*w …]` for `w` running over `base`.
pub fn zeta8_images(base: &[PLMap]) -> Vec<PLMap> {
    star_double(base)
}

pub fn zeta8_pairing() -> Result<i64> {
    zeta8_pairing_with(&rank_four_images())
}

pub fn zeta8_pairing_with(base: &[PLMap]) -> Result<i64> {
    cup_power_pairing(&zeta8_images(base))
}

/// Contributions with nonzero determinant, for reporting.
pub fn nonzero_contributions(a: &PLMap, b: &PLMap) -> Result<Vec<Contribution>> {
    Ok(gs_contributions(a, b)?
        .into_iter()
        .filter(|c| c.det != 0)
        .collect())
}

/// `x` of a contribution as a plain rational string, `1/2` rather than `1/2^1`.
pub fn contribution_x(c: &Contribution) -> String {
    let r = c.x.to_rational();
    match r.to_i64() {
        Some(v) if r.is_integer() => v.to_string(),
        _ => r.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bar::codifferential;
    use crate::thompson::{parse_element, random_word};
    use num_traits::Zero;
    use rand::SeedableRng;

    fn literal_det(a: &PLMap, b: &PLMap) -> i64 {
        // rows (left, right), columns (b, a∘b), as the matrix is usually printed
        let ab = a.compose(b);
        let x = Dyadic::new(1, 1);
        b.left_slope_log2(&x) * ab.right_slope_log2(&x)
            - ab.left_slope_log2(&x) * b.right_slope_log2(&x)
    }

    #[test]
    fn standard_values() {
        assert_eq!(gs_evaluate(&f(), &g()).unwrap(), 1);
        assert_eq!(gs_evaluate(&g(), &f()).unwrap(), -1);
        let only = nonzero_contributions(&f(), &g()).unwrap();
        assert_eq!(
            only,
            vec![Contribution {
                x: Dyadic::new(1, 1),
                det: 1
            }]
        );
        assert_eq!(contribution_x(&only[0]), "1/2");
        // the column order matters: the other one gives -1 on (f, g)
        assert_eq!(literal_det(&f(), &g()), -1);
    }

    #[test]
    fn identity_argument_gives_zero() {
        let id = PLMap::identity();
        assert_eq!(gs_evaluate(&id, &g()).unwrap(), 0);
        assert_eq!(gs_evaluate(&g(), &id).unwrap(), 0);
    }

    #[test]
    fn rejects_maps_outside_f_prime() {
        let a = PLMap::from_points(vec![
            (Dyadic::zero(), Dyadic::zero()),
            (Dyadic::new(1, 1), Dyadic::new(1, 2)),
            (Dyadic::new(3, 2), Dyadic::new(1, 1)),
            (Dyadic::one(), Dyadic::one()),
        ])
        .unwrap();
        assert!(matches!(gs_evaluate(&a, &f()), Err(Error::NotInFPrime(_))));
        assert!(matches!(gs_evaluate(&f(), &a), Err(Error::NotInFPrime(_))));
    }

    #[test]
    fn disjoint_supports_antisymmetry() {
        for (a, b) in [("f", "g"), ("f*1", "1*g"), ("f*1", "g*1"), ("1*f", "1*g")] {
            let a = parse_element(a).unwrap();
            let b = parse_element(b).unwrap();
            assert_eq!(gs_evaluate(&a, &b).unwrap(), -gs_evaluate(&b, &a).unwrap());
        }
    }

    #[test]
    fn extra_points_add_nothing() {
        let a = f();
        let b = g();
        let ab = a.compose(&b);
        let extra: Vec<Dyadic> = (0..=16).map(|k| Dyadic::new(k, 4)).collect();
        let enlarged: i64 = extra
            .iter()
            .chain(b.breakpoints())
            .chain(ab.breakpoints())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .map(|x| {
                ab.left_slope_log2(x) * b.right_slope_log2(x)
                    - ab.right_slope_log2(x) * b.left_slope_log2(x)
            })
            .sum();
        assert_eq!(enlarged, gs_evaluate(&a, &b).unwrap());
    }

    #[test]
    fn cocycle_identity_on_random_words() {
        let gens: Vec<PLMap> = ["f", "g", "f*1", "1*g"]
            .iter()
            .map(|s| parse_element(s).unwrap())
            .collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let d = codifferential(&FPrime, &gs_cochain());
        for _ in 0..60 {
            let t: Vec<PLMap> = (0..3).map(|_| random_word(&mut rng, &gens, 6)).collect();
            assert!(d.eval(&t).is_zero());
        }
    }

    #[test]
    fn small_pairings() {
        assert_eq!(zeta2_pairing().unwrap(), 2);
        assert_eq!(zeta4_pairing().unwrap(), 8);
    }

    #[test]
    fn wrong_image_sets() {
        assert!(matches!(
            cup_power_pairing(&[f(), g(), f()]),
            Err(Error::ZetaOutOfRange(3))
        ));
        let h = parse_element("f*1").unwrap();
        assert!(matches!(
            cup_power_pairing(&[f(), h]),
            Err(Error::NonCommuting(0, 1))
        ));
    }

    #[test]
    fn pairing_with_arbitrary_chains() {
        let fg = [f(), g()];
        assert_eq!(pair_cup_power(&fg, &zeta(2).unwrap()).unwrap(), rat(2));
        let single = Chain::from_terms(2, [(5, vec![vec![1, 0], vec![0, 1]])]).unwrap();
        assert_eq!(pair_cup_power(&fg, &single).unwrap(), rat(5));
        let wrong_rank = Chain::from_terms(2, [(1, vec![vec![1, 0, 0], vec![0, 1, 0]])]).unwrap();
        assert!(matches!(
            pair_cup_power(&fg, &wrong_rank),
            Err(Error::ArityMismatch {
                expected: 2,
                got: 3
            })
        ));
        let odd = [f(), g(), PLMap::identity()];
        assert!(matches!(
            pair_cup_power(&odd, &zeta(2).unwrap()),
            Err(Error::ZetaOutOfRange(3))
        ));
        assert!(matches!(
            pair_cup_power(&fg, &zeta(4).unwrap()),
            Err(Error::ArityMismatch { .. })
        ));
        let e = vec![1, 0];
        let degree_three = Chain::from_terms(3, [(1, vec![e.clone(), e.clone(), e])]).unwrap();
        assert!(matches!(
            pair_cup_power(&fg, &degree_three),
            Err(Error::DegreeMismatch { .. })
        ));
    }
}
