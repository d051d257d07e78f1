//! Two pseudometrics from 1-bounded 2-cocycles.
//!
//! - The oscillation norm `‖g‖_ω = sup_{h,h'} |ω(g,h) - ω(g,h')|` of a
//!   2-cocycle `ω`.
//! - The length `|g|_φ = sup_h |φ(gh) - φ(h)|` of an abstractly Lipschitz
//!   function `φ`.
//!
//! For `ω = δφ` they satisfy `‖g‖_{δφ} <= 2|g|_φ`.
//!
//! Over a finite group every supremum is a maximum over the group and the
//! results are [`Bound::Exact`]. Over a sample of an infinite group they are
//! [`Bound::LowerBound`] and no axiom is asserted.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::bar::{codifferential, Bound, Cochain};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Group};
use crate::rational::{rat, Rational};

/// The `h` range of a supremum.
#[derive(Clone, Debug)]
pub struct Domain<E> {
    elements: Vec<E>,
    bound: Bound,
}

impl<E: Clone> Domain<E> {
    pub fn finite<G: Group<Elem = E>>(group: &G) -> Result<Self> {
        Ok(Domain {
            elements: group.elements().ok_or(Error::InfiniteGroup)?.to_vec(),
            bound: Bound::Exact,
        })
    }

    pub fn sampled(elements: Vec<E>) -> Self {
        Domain {
            elements,
            bound: Bound::LowerBound,
        }
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn bound(&self) -> Bound {
        self.bound
    }
}

/// `h ∈ [-radius, radius] ⊂ ℤ`.
pub fn integer_window(radius: i64) -> Domain<Vec<i64>> {
    Domain::sampled((-radius..=radius).map(|h| vec![h]).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Estimate {
    pub value: Rational,
    pub bound: Bound,
}

/// `max - min`, zero on an empty sequence.
pub fn oscillation<I: IntoIterator<Item = Rational>>(values: I) -> Rational {
    let mut it = values.into_iter();
    let Some(first) = it.next() else {
        return Rational::zero();
    };
    let (lo, hi) = it.fold((first.clone(), first), |(lo, hi), v| {
        if v < lo {
            (v, hi)
        } else if v > hi {
            (lo, v)
        } else {
            (lo, hi)
        }
    });
    hi - lo
}

pub fn osc_norm<E>(omega: &Cochain<E>, g: &E, domain: &Domain<E>) -> Estimate
where
    E: Clone + Eq + std::hash::Hash + Send + Sync + 'static,
{
    assert_eq!(omega.degree(), 2);
    Estimate {
        value: oscillation(
            domain
                .elements
                .iter()
                .map(|h| omega.eval(&[g.clone(), h.clone()])),
        ),
        bound: domain.bound,
    }
}

pub fn lipschitz_length<G: Group>(
    group: &G,
    phi: &Cochain<G::Elem>,
    g: &G::Elem,
    domain: &Domain<G::Elem>,
) -> Estimate {
    assert_eq!(phi.degree(), 1);
    let value = domain
        .elements
        .iter()
        .map(|h| (phi.eval(&[group.multiply(g, h)]) - phi.eval(std::slice::from_ref(h))).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    Estimate {
        value,
        bound: domain.bound,
    }
}

/// `|ψ|_osc` of a degree-1 cochain over a finite group.
pub fn cochain_oscillation(group: &FiniteGroup, eta: &Cochain<usize>) -> Rational {
    oscillation(group.all().iter().map(|g| eta.eval(&[*g])))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricAxioms {
    pub cocycle: bool,
    pub identity_zero: bool,
    pub symmetric: bool,
    pub triangle: bool,
    /// `ω(ab,h) - ω(ab,h') = ω(b,h) - ω(b,h') + ω(a,bh) - ω(a,bh')` on all tuples.
    pub expansion: bool,
    pub counterexample: Option<Vec<String>>,
}

impl MetricAxioms {
    pub fn passed(&self) -> bool {
        self.cocycle && self.identity_zero && self.symmetric && self.triangle && self.expansion
    }
}

/// All oscillation norms of a 2-cochain on a finite group, by element index.
pub fn osc_norms(group: &FiniteGroup, omega: &Cochain<usize>) -> Vec<Rational> {
    let domain = Domain::finite(group).expect("finite");
    group
        .all()
        .par_iter()
        .map(|g| osc_norm(omega, g, &domain).value)
        .collect()
}

/// Exhaustive check that `‖·‖_ω` is a length function on a finite group.
///
/// `expand_limit` caps the group order for the four-fold expansion identity.
pub fn pseudometric_check(
    group: &FiniteGroup,
    omega: &Cochain<usize>,
    expand_limit: usize,
) -> MetricAxioms {
    let label = |t: &[usize]| t.iter().map(|g| group.label(g)).collect::<Vec<_>>();
    let d = codifferential(group, omega);
    let bad_cocycle = group.tuples(3).find(|t| !d.eval(t).is_zero());
    let norms = osc_norms(group, omega);
    let identity_zero = norms[0].is_zero();
    let bad_symmetry = group
        .all()
        .iter()
        .find(|&&g| norms[g] != norms[group.invert(&g)]);
    let bad_triangle = group
        .tuples(2)
        .find(|t| norms[group.multiply(&t[0], &t[1])] > &norms[t[0]] + &norms[t[1]]);
    let bad_expansion = if group.order() <= expand_limit {
        group.tuples(4).find(|t| {
            let (a, b, h, k) = (t[0], t[1], t[2], t[3]);
            let ab = group.multiply(&a, &b);
            let lhs = omega.eval(&[ab, h]) - omega.eval(&[ab, k]);
            let rhs = omega.eval(&[b, h]) - omega.eval(&[b, k])
                + omega.eval(&[a, group.multiply(&b, &h)])
                - omega.eval(&[a, group.multiply(&b, &k)]);
            lhs != rhs
        })
    } else {
        None
    };
    let counterexample = bad_cocycle
        .clone()
        .or_else(|| bad_symmetry.map(|g| vec![*g]))
        .or_else(|| bad_triangle.clone())
        .or_else(|| bad_expansion.clone())
        .map(|t| label(&t));
    MetricAxioms {
        cocycle: bad_cocycle.is_none(),
        identity_zero,
        symmetric: bad_symmetry.is_none(),
        triangle: bad_triangle.is_none(),
        expansion: bad_expansion.is_none(),
        counterexample,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    /// `max_g |‖g‖_ω - ‖g‖_{ω+δη}|`
    pub max_deviation: Rational,
    /// `2|η|_osc`
    pub bound: Rational,
    pub holds: bool,
}

impl StabilityReport {
    pub fn slack(&self) -> Rational {
        &self.bound - &self.max_deviation
    }
}

pub fn coboundary_stability(
    group: &FiniteGroup,
    omega: &Cochain<usize>,
    eta: &Cochain<usize>,
) -> StabilityReport {
    assert_eq!(eta.degree(), 1);
    let shifted = omega.add(&codifferential(group, eta)).materialize(group);
    let a = osc_norms(group, omega);
    let b = osc_norms(group, &shifted);
    let max_deviation = a
        .iter()
        .zip(&b)
        .map(|(x, y)| (x - y).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    let bound = cochain_oscillation(group, eta) * rat(2);
    StabilityReport {
        holds: max_deviation <= bound,
        max_deviation,
        bound,
    }
}

#[derive(Clone, Debug)]
pub struct ComparisonRow<E> {
    pub g: E,
    /// `‖g‖_{δφ}`
    pub norm: Rational,
    /// `|g|_φ`
    pub length: Rational,
}

#[derive(Clone, Debug)]
pub struct ComparisonReport<E> {
    pub rows: Vec<ComparisonRow<E>>,
    pub bound: Bound,
    /// `‖g‖_{δφ} <= 2|g|_φ` on every row.
    pub holds: bool,
    /// Extremes of `‖g‖_{δφ} / |g|_φ` over rows with `|g|_φ > 0`.
    pub ratio_range: Option<(Rational, Rational)>,
}

pub fn compare_constructions<G: Group>(
    group: &G,
    phi: &Cochain<G::Elem>,
    rows: &[G::Elem],
    domain: &Domain<G::Elem>,
) -> ComparisonReport<G::Elem> {
    let d = codifferential(group, phi);
    let rows: Vec<ComparisonRow<G::Elem>> = rows
        .par_iter()
        .map(|g| ComparisonRow {
            g: g.clone(),
            norm: osc_norm(&d, g, domain).value,
            length: lipschitz_length(group, phi, g, domain).value,
        })
        .collect();
    let holds = rows.iter().all(|r| r.norm <= &r.length * rat(2));
    let ratios: Vec<Rational> = rows
        .iter()
        .filter(|r| !r.length.is_zero())
        .map(|r| &r.norm / &r.length)
        .collect();
    let ratio_range = match (ratios.iter().min(), ratios.iter().max()) {
        (Some(lo), Some(hi)) => Some((lo.clone(), hi.clone())),
        _ => None,
    };
    ComparisonReport {
        rows,
        bound: domain.bound,
        holds,
        ratio_range,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LipschitzReport {
    /// `|φ(gh) - φ(h)| <= |g|_φ` on every sampled pair.
    pub wrt_own_length: bool,
    /// The supplied length satisfies `|φ(gh) - φ(h)| <= |g|` on every pair.
    pub hypothesis: bool,
    /// `|g|_φ <= |g|`; only meaningful when `hypothesis` holds.
    pub dominated: bool,
}

/// Both directions of the Lipschitz characterisation on a domain.
pub fn lipschitz_wrt_length<G, L>(
    group: &G,
    phi: &Cochain<G::Elem>,
    length: L,
    domain: &Domain<G::Elem>,
) -> LipschitzReport
where
    G: Group,
    L: Fn(&G::Elem) -> Rational + Sync,
{
    let elems = domain.elements();
    let step = |g: &G::Elem, h: &G::Elem| {
        (phi.eval(&[group.multiply(g, h)]) - phi.eval(std::slice::from_ref(h))).abs()
    };
    let per_g: Vec<(bool, bool, bool)> = elems
        .par_iter()
        .map(|g| {
            let own = lipschitz_length(group, phi, g, domain).value;
            let given = length(g);
            let mut a = true;
            let mut b = true;
            for h in elems {
                let s = step(g, h);
                a &= s <= own;
                b &= s <= given;
            }
            (a, b, own <= given)
        })
        .collect();
    let hypothesis = per_g.iter().all(|x| x.1);
    LipschitzReport {
        wrt_own_length: per_g.iter().all(|x| x.0),
        hypothesis,
        dominated: hypothesis && per_g.iter().all(|x| x.2),
    }
}

/// `φ(k) = |k|` on `ℤ`.
pub fn abs_function() -> Cochain<Vec<i64>> {
    Cochain::new(1, |t: &[Vec<i64>]| rat(t[0][0].abs()))
}

/// Closed form of `‖g‖_{δφ}` for `φ = |·|` on `ℤ`: `h ↦ |g+h| - |h|` sweeps `[-|g|, |g|]`.
pub fn abs_osc_norm(g: i64) -> Rational {
    rat(2 * g.abs())
}

/// Closed form of `|g|_φ` for `φ = |·|` on `ℤ`.
pub fn abs_length(g: i64) -> Rational {
    rat(g.abs())
}
