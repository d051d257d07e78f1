//! Homotopy operators over finite groups.
//!
//! Everything here works on a [`FiniteGroup`], where the uniform mean is an
//! exact invariant mean and every cochain is bounded. The operators are:
//!
//! - `M` ([`averaging_m`]): `Mω(g₁,…,g_n) = mean_h ω(h, g₁,…,g_n)`, with
//!   `Mδ + δM = id` in positive degrees.
//! - `Λ₀` ([`lambda0`]): `Λ₀ω(g₁,…,g_{n-1})(h) = ω(h, g₁,…,g_{n-1})`, an
//!   `ℓ∞Γ`-valued cochain with `δΛ₀ + Λ₀δ = ι`, where `ι` views a rational
//!   value as a constant function.
//! - `Λ` ([`lambda_quotient`]): `Λ₀` followed by `ℓ∞Γ → ℓ∞Γ/ℝ`.
//! - `H` ([`one_constant_h`]): the contraction of the 1-constant subcomplex.
//!
//! The module `ℓ∞Γ` carries the action `(h·F)(g) = F(gh)`. The quotient
//! `ℓ∞Γ/ℝ` is represented by functions vanishing at the identity.

use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;

use crate::bar::{codifferential, face, Cochain};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Group, Mean};
use crate::rational::{ratio, Rational};

/// A function `Γ → ℚ`, indexed by element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinfElement(Vec<Rational>);

impl LinfElement {
    pub fn from_fn<F: FnMut(usize) -> Rational>(group: &FiniteGroup, f: F) -> Self {
        LinfElement((0..group.order()).map(f).collect())
    }

    pub fn constant(group: &FiniteGroup, c: Rational) -> Self {
        LinfElement(vec![c; group.order()])
    }

    pub fn zero(group: &FiniteGroup) -> Self {
        Self::constant(group, Rational::zero())
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn at(&self, g: usize) -> &Rational {
        &self.0[g]
    }

    /// `(h·F)(g) = F(gh)`.
    pub fn act(&self, group: &FiniteGroup, h: usize) -> Self {
        LinfElement::from_fn(group, |g| self.0[group.multiply(&g, &h)].clone())
    }

    pub fn add_assign(&mut self, other: &LinfElement) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    pub fn sub_assign(&mut self, other: &LinfElement) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a -= b;
        }
    }

    pub fn neg(&self) -> Self {
        LinfElement(self.0.iter().map(|v| -v).collect())
    }

    /// The value when `F` is constant.
    pub fn constant_value(&self) -> Option<Rational> {
        let first = self.0.first()?;
        self.0.iter().all(|v| v == first).then(|| first.clone())
    }

    /// The canonical representative in `ℓ∞Γ/ℝ`: subtract `F(1)`.
    pub fn normalize(&self) -> LinfModR {
        let base = self.0[0].clone();
        LinfModR(LinfElement(self.0.iter().map(|v| v - &base).collect()))
    }
}

/// An element of `ℓ∞Γ/ℝ`, stored as its representative with `F(1) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinfModR(LinfElement);

impl LinfModR {
    pub fn representative(&self) -> &LinfElement {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 .0.iter().all(|v| v.is_zero())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    /// `ℓ∞Γ`
    Linf,
    /// `ℓ∞Γ/ℝ`
    LinfModR,
}

type ModuleEval = dyn Fn(&[usize]) -> LinfElement + Send + Sync;

/// A cochain with values in `ℓ∞Γ` or `ℓ∞Γ/ℝ`. Quotient-valued cochains
/// always return normalized representatives.
#[derive(Clone)]
pub struct ModuleCochain {
    degree: usize,
    coeffs: Coefficients,
    eval: Arc<ModuleEval>,
}

impl std::fmt::Debug for ModuleCochain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ModuleCochain(degree {}, {:?})",
            self.degree, self.coeffs
        )
    }
}

impl ModuleCochain {
    pub fn new<F>(degree: usize, coeffs: Coefficients, f: F) -> Self
    where
        F: Fn(&[usize]) -> LinfElement + Send + Sync + 'static,
    {
        let eval: Arc<ModuleEval> = match coeffs {
            Coefficients::Linf => Arc::new(f),
            Coefficients::LinfModR => Arc::new(move |t| f(t).normalize().0),
        };
        ModuleCochain {
            degree,
            coeffs,
            eval,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coeffs
    }

    pub fn eval(&self, t: &[usize]) -> LinfElement {
        assert_eq!(t.len(), self.degree);
        (self.eval)(t)
    }

    /// Caches the values on every tuple.
    pub fn materialize(&self, group: &FiniteGroup) -> Self {
        let table: Vec<LinfElement> = (0..group.tuple_count(self.degree))
            .into_par_iter()
            .map(|i| self.eval(&group.tuple(self.degree, i)))
            .collect();
        let grp = group.clone();
        let table = Arc::new(table);
        ModuleCochain {
            degree: self.degree,
            coeffs: self.coeffs,
            eval: Arc::new(move |t| table[grp.tuple_index(t)].clone()),
        }
    }

    pub fn add(&self, other: &ModuleCochain) -> ModuleCochain {
        assert_eq!(self.degree, other.degree);
        let (a, b) = (self.clone(), other.clone());
        ModuleCochain::new(self.degree, self.coeffs, move |t| {
            let mut v = a.eval(t);
            v.add_assign(&b.eval(t));
            v
        })
    }
}

/// `δη(g₁,…,g_{n+1}) = g₁·η(g₂,…) + Σ (-1)^i η(…,g_i g_{i+1},…) + (-1)^{n+1} η(g₁,…,g_n)`.
pub fn module_codifferential(group: &FiniteGroup, eta: &ModuleCochain) -> ModuleCochain {
    let grp = group.clone();
    let e = eta.clone();
    ModuleCochain::new(eta.degree + 1, eta.coeffs, move |g| {
        let m = g.len();
        let mut acc = e.eval(&g[1..]).act(&grp, g[0]);
        for i in 1..=m {
            let v = e.eval(&face(&grp, g, i));
            if i % 2 == 0 {
                acc.add_assign(&v);
            } else {
                acc.sub_assign(&v);
            }
        }
        acc
    })
}

/// `ι: ℝ → ℓ∞Γ` applied valuewise.
pub fn include_constants(group: &FiniteGroup, omega: &Cochain<usize>) -> ModuleCochain {
    let grp = group.clone();
    let w = omega.clone();
    ModuleCochain::new(omega.degree(), Coefficients::Linf, move |t| {
        LinfElement::constant(&grp, w.eval(t))
    })
}

fn require_degree(omega: &Cochain<usize>, min: usize) -> Result<()> {
    if omega.degree() < min {
        Err(Error::DegreeTooLow {
            min,
            got: omega.degree(),
        })
    } else {
        Ok(())
    }
}

/// `Mω(g₁,…,g_n) = mean_h ω(h, g₁,…,g_n)` for `ω` of degree `n+1 >= 1`.
pub fn averaging_m(mean: &Mean<FiniteGroup>, omega: &Cochain<usize>) -> Result<Cochain<usize>> {
    require_degree(omega, 1)?;
    let mean = mean.clone();
    let w = omega.clone();
    Ok(Cochain::new(omega.degree() - 1, move |g| {
        let mut t = Vec::with_capacity(g.len() + 1);
        t.push(0);
        t.extend_from_slice(g);
        mean.average(|h| {
            let mut t = t.clone();
            t[0] = *h;
            w.eval(&t)
        })
    }))
}

/// `Λ₀ω(g₁,…,g_{n-1})(h) = ω(h, g₁,…,g_{n-1})`.
pub fn lambda0(group: &FiniteGroup, omega: &Cochain<usize>) -> Result<ModuleCochain> {
    require_degree(omega, 1)?;
    let grp = group.clone();
    let w = omega.clone();
    Ok(ModuleCochain::new(
        omega.degree() - 1,
        Coefficients::Linf,
        move |g| {
            let mut t = Vec::with_capacity(g.len() + 1);
            t.push(0);
            t.extend_from_slice(g);
            LinfElement::from_fn(&grp, |h| {
                t[0] = h;
                w.eval(&t)
            })
        },
    ))
}

/// `Λω`: `Λ₀ω` projected to `ℓ∞Γ/ℝ`.
pub fn lambda_quotient(group: &FiniteGroup, omega: &Cochain<usize>) -> Result<ModuleCochain> {
    let l = lambda0(group, omega)?;
    Ok(ModuleCochain::new(
        l.degree,
        Coefficients::LinfModR,
        move |t| l.eval(t),
    ))
}

/// First pair of tuples differing only in the first slot with different
/// values, if any.
pub fn one_constant_witness(
    group: &FiniteGroup,
    omega: &Cochain<usize>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = omega.degree();
    if n == 0 {
        return None;
    }
    let k = group.order();
    (0..group.tuple_count(n - 1))
        .into_par_iter()
        .find_map_first(|i| {
            let tail = group.tuple(n - 1, i);
            let mut base = vec![0];
            base.extend_from_slice(&tail);
            let v0 = omega.eval(&base);
            (1..k).find_map(|h| {
                let mut t = base.clone();
                t[0] = h;
                (omega.eval(&t) != v0).then(|| (base.clone(), t))
            })
        })
}

fn labels(group: &FiniteGroup, t: &[usize]) -> Vec<String> {
    t.iter().map(|g| group.label(g)).collect()
}

fn h_unchecked(omega: &Cochain<usize>) -> Cochain<usize> {
    let n = omega.degree();
    let w = omega.clone();
    Cochain::new(n - 1, move |g| {
        if n == 1 {
            return w.eval(&[0]);
        }
        let mut t = Vec::with_capacity(n);
        t.push(0);
        t.push(0);
        t.extend_from_slice(&g[1..]);
        w.eval(&t)
    })
}

/// `Hω(g₂,…,g_n) = ω(1, 1, g₃,…,g_n)` on 1-constant cochains of degree
/// `n >= 2`, and `Hω = ω(1)` in degree 1.
pub fn one_constant_h(group: &FiniteGroup, omega: &Cochain<usize>) -> Result<Cochain<usize>> {
    require_degree(omega, 1)?;
    if let Some((a, b)) = one_constant_witness(group, omega) {
        return Err(Error::NotOneConstant(labels(group, &a), labels(group, &b)));
    }
    Ok(h_unchecked(omega))
}

/// First tuple where `δω ≠ 0`.
pub fn cocycle_witness(group: &FiniteGroup, omega: &Cochain<usize>) -> Option<Vec<usize>> {
    let d = codifferential(group, omega);
    let n = d.degree();
    (0..group.tuple_count(n))
        .into_par_iter()
        .map(|i| group.tuple(n, i))
        .find_first(|t| !d.eval(t).is_zero())
}

fn constant_valued(group: &FiniteGroup, m: &ModuleCochain) -> Result<Cochain<usize>> {
    let n = m.degree();
    let values: Vec<Option<Rational>> = (0..group.tuple_count(n))
        .into_par_iter()
        .map(|i| m.eval(&group.tuple(n, i)).constant_value())
        .collect();
    let values = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| Error::NotCocycle(labels(group, &group.tuple(n, i)))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Cochain::from_table(group, n, values))
}

/// `δ(Λ₀ω)` for a cocycle `ω`, read back as a rational cochain. This is the
/// Bockstein image of `Λω` computed with the lift `Λ₀ω`; it equals `ω`.
pub fn bockstein_of_lambda(group: &FiniteGroup, omega: &Cochain<usize>) -> Result<Cochain<usize>> {
    require_degree(omega, 1)?;
    if let Some(t) = cocycle_witness(group, omega) {
        return Err(Error::NotCocycle(labels(group, &t)));
    }
    let lift = lambda0(group, omega)?;
    constant_valued(group, &module_codifferential(group, &lift))
}

/// The same Bockstein computation with the lift `Λ₀ω + ι(shift)`.
///
/// Returns `(output, defect)` where `defect = δ(shift)` and
/// `output = ω + defect`.
pub fn bockstein_with_shifted_lift(
    group: &FiniteGroup,
    omega: &Cochain<usize>,
    shift: &Cochain<usize>,
) -> Result<(Cochain<usize>, Cochain<usize>)> {
    require_degree(omega, 1)?;
    if shift.degree() + 1 != omega.degree() {
        return Err(Error::DegreeMismatch {
            cochain: shift.degree(),
            chain: omega.degree() - 1,
        });
    }
    if let Some(t) = cocycle_witness(group, omega) {
        return Err(Error::NotCocycle(labels(group, &t)));
    }
    let lift = lambda0(group, omega)?.add(&include_constants(group, shift));
    let output = constant_valued(group, &module_codifferential(group, &lift))?;
    Ok((output, codifferential(group, shift)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingReport {
    /// `mean(h·F) = mean(F)` for every sampled `F` and every `h`.
    pub invariant: bool,
    /// `mean(c) = c` on the sampled constants, i.e. the mean splits `ι`.
    pub retracts_constants: bool,
    pub functions_checked: usize,
}

impl SplittingReport {
    pub fn passed(&self) -> bool {
        self.invariant && self.retracts_constants
    }
}

pub fn splitting_check(
    mean: &Mean<FiniteGroup>,
    functions: &[LinfElement],
    constants: &[Rational],
) -> SplittingReport {
    let group = mean.group();
    let avg = |f: &LinfElement| mean.average(|g| f.at(*g).clone());
    let invariant = functions.iter().all(|f| {
        let m = avg(f);
        group.all().iter().all(|&h| avg(&f.act(group, h)) == m)
    });
    let retracts_constants = constants
        .iter()
        .all(|c| avg(&LinfElement::constant(group, c.clone())) == *c);
    SplittingReport {
        invariant,
        retracts_constants,
        functions_checked: functions.len(),
    }
}

/// A cochain with independent values `p/q`, `|p| <= 12`, `1 <= q <= 3`.
pub fn random_cochain<R: Rng + ?Sized>(
    group: &FiniteGroup,
    degree: usize,
    rng: &mut R,
) -> Cochain<usize> {
    let values = (0..group.tuple_count(degree))
        .map(|_| random_value(rng))
        .collect();
    Cochain::from_table(group, degree, values)
}

fn random_value<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    ratio(rng.gen_range(-12..=12), rng.gen_range(1..=3))
}

/// A random cochain of degree `degree >= 1` that ignores its first argument.
pub fn random_one_constant<R: Rng + ?Sized>(
    group: &FiniteGroup,
    degree: usize,
    rng: &mut R,
) -> Cochain<usize> {
    assert!(degree >= 1);
    let inner = random_cochain(group, degree - 1, rng);
    Cochain::new(degree, move |t| inner.eval(&t[1..]))
}

/// `δ` of a random cochain one degree lower, tabulated. On a finite group
/// these are all the cocycles of positive degree.
pub fn random_cocycle<R: Rng + ?Sized>(
    group: &FiniteGroup,
    degree: usize,
    rng: &mut R,
) -> Cochain<usize> {
    assert!(degree >= 1);
    let eta = random_cochain(group, degree - 1, rng);
    codifferential(group, &eta).materialize(group)
}

pub mod verify {
    //! The operator identities as exhaustive, exact checks.

    use super::*;

    #[derive(Clone, Debug, PartialEq, Eq)]
    pub struct IdentityCheck {
        pub name: &'static str,
        pub passed: bool,
        pub cochains: usize,
        pub tuples: usize,
        /// The first failing tuple, as element labels.
        pub counterexample: Option<Vec<String>>,
    }

    pub const IDENTITIES: [&str; 6] = [
        "averaging",
        "lambda0_homotopy",
        "lambda_anticommutes",
        "one_constant_contraction",
        "bockstein",
        "comparison_vanishing",
    ];

    fn first_failure<F>(group: &FiniteGroup, degree: usize, ok: F) -> Option<Vec<usize>>
    where
        F: Fn(&[usize]) -> bool + Sync,
    {
        (0..group.tuple_count(degree))
            .into_par_iter()
            .map(|i| group.tuple(degree, i))
            .find_first(|t| !ok(t))
    }

    fn run<G, F>(
        name: &'static str,
        group: &FiniteGroup,
        degree: usize,
        trials: usize,
        mut make: G,
        check: F,
    ) -> IdentityCheck
    where
        G: FnMut() -> Cochain<usize>,
        F: Fn(&Cochain<usize>) -> Option<Vec<usize>>,
    {
        for _ in 0..trials {
            let omega = make();
            if let Some(t) = check(&omega) {
                return IdentityCheck {
                    name,
                    passed: false,
                    cochains: trials,
                    tuples: group.tuple_count(degree),
                    counterexample: Some(labels(group, &t)),
                };
            }
        }
        IdentityCheck {
            name,
            passed: true,
            cochains: trials,
            tuples: group.tuple_count(degree),
            counterexample: None,
        }
    }

    /// `Mδω + δMω = ω`.
    pub fn averaging<R: Rng>(
        group: &FiniteGroup,
        degree: usize,
        trials: usize,
        rng: &mut R,
    ) -> IdentityCheck {
        let mean = Mean::uniform(group).expect("finite");
        run(
            "averaging",
            group,
            degree,
            trials,
            || random_cochain(group, degree, rng),
            |omega| {
                let d = codifferential(group, omega).materialize(group);
                let m_d = averaging_m(&mean, &d).expect("degree >= 1");
                let m = averaging_m(&mean, omega)
                    .expect("degree >= 1")
                    .materialize(group);
                let d_m = codifferential(group, &m);
                first_failure(group, degree, |t| {
                    m_d.eval(t) + d_m.eval(t) == omega.eval(t)
                })
            },
        )
    }

    /// `δΛ₀ω + Λ₀δω = ιω`.
    pub fn lambda0_homotopy<R: Rng>(
        group: &FiniteGroup,
        degree: usize,
        trials: usize,
        rng: &mut R,
    ) -> IdentityCheck {
        run(
            "lambda0_homotopy",
            group,
            degree,
            trials,
            || random_cochain(group, degree, rng),
            |omega| {
                let l = lambda0(group, omega)
                    .expect("degree >= 1")
                    .materialize(group);
                let dl = module_codifferential(group, &l);
                let d = codifferential(group, omega).materialize(group);
                let ld = lambda0(group, &d).expect("degree >= 1");
                first_failure(group, degree, |t| {
                    let mut v = dl.eval(t);
                    v.add_assign(&ld.eval(t));
                    v == LinfElement::constant(group, omega.eval(t))
                })
            },
        )
    }

    /// `Λδω = -δΛω` in `ℓ∞Γ/ℝ`.
    pub fn lambda_anticommutes<R: Rng>(
        group: &FiniteGroup,
        degree: usize,
        trials: usize,
        rng: &mut R,
    ) -> IdentityCheck {
        run(
            "lambda_anticommutes",
            group,
            degree,
            trials,
            || random_cochain(group, degree, rng),
            |omega| {
                let l = lambda_quotient(group, omega)
                    .expect("degree >= 1")
                    .materialize(group);
                let dl = module_codifferential(group, &l);
                let d = codifferential(group, omega).materialize(group);
                let ld = lambda_quotient(group, &d).expect("degree >= 1");
                first_failure(group, degree, |t| {
                    ld.eval(t) == dl.eval(t).neg().normalize().0
                })
            },
        )
    }

    /// `δHω + Hδω = ω` on 1-constant `ω`.
    pub fn one_constant_contraction<R: Rng>(
        group: &FiniteGroup,
        degree: usize,
        trials: usize,
        rng: &mut R,
    ) -> IdentityCheck {
        run(
            "one_constant_contraction",
            group,
            degree,
            trials,
            || random_one_constant(group, degree, rng),
            |omega| {
                let h = one_constant_h(group, omega)
                    .expect("1-constant by construction")
                    .materialize(group);
                let dh = codifferential(group, &h);
                let d = codifferential(group, omega).materialize(group);
                let hd = h_unchecked(&d);
                first_failure(group, degree, |t| dh.eval(t) + hd.eval(t) == omega.eval(t))
            },
        )
    }

    /// `δΛ₀ω = ω` for cocycles.
    pub fn bockstein<R: Rng>(
        group: &FiniteGroup,
        degree: usize,
        trials: usize,
        rng: &mut R,
    ) -> IdentityCheck {
        run(
            "bockstein",
            group,
            degree,
            trials,
            || random_cocycle(group, degree, rng),
            |omega| match bockstein_of_lambda(group, omega) {
                Ok(b) => first_failure(group, degree, |t| b.eval(t) == omega.eval(t)),
                Err(_) => Some(vec![0; degree]),
            },
        )
    }

    /// `ω = δMω` for cocycles.
    pub fn comparison_vanishing<R: Rng>(
        group: &FiniteGroup,
        degree: usize,
        trials: usize,
        rng: &mut R,
    ) -> IdentityCheck {
        let mean = Mean::uniform(group).expect("finite");
        run(
            "comparison_vanishing",
            group,
            degree,
            trials,
            || random_cocycle(group, degree, rng),
            |omega| {
                let m = averaging_m(&mean, omega)
                    .expect("degree >= 1")
                    .materialize(group);
                let dm = codifferential(group, &m);
                first_failure(group, degree, |t| dm.eval(t) == omega.eval(t))
            },
        )
    }

    /// Every identity in [`IDENTITIES`] order, each with `trials` cochains.
    pub fn run_all<R: Rng>(
        group: &FiniteGroup,
        degree: usize,
        trials: usize,
        rng: &mut R,
    ) -> Vec<IdentityCheck> {
        vec![
            averaging(group, degree, trials, rng),
            lambda0_homotopy(group, degree, trials, rng),
            lambda_anticommutes(group, degree, trials, rng),
            one_constant_contraction(group, degree, trials, rng),
            bockstein(group, degree, trials, rng),
            comparison_vanishing(group, degree, trials, rng),
        ]
    }
}
