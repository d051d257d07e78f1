//! Inhomogeneous bar complex with trivial rational coefficients.
//!
//! The codifferential of an `n`-cochain is
//!
//! ```text
//! δω(g₁,…,g_{n+1}) = ω(g₂,…,g_{n+1})
//!                  + Σ_{i=1..n} (-1)^i ω(g₁,…,g_i g_{i+1},…,g_{n+1})
//!                  + (-1)^{n+1} ω(g₁,…,g_n)
//! ```
//!
//! applied uniformly in every degree. For `n = 0` this reads
//! `δc(g) = c - c = 0`, the only choice compatible with `δδ = 0` and with
//! the homotopy identities in [`crate::homotopy`].

use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use dashmap::DashMap;
use indexmap::IndexMap;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Group, Homomorphism};
use crate::perm;
use crate::rational::{rat, Rational};

type Evaluator<E> = dyn Fn(&[E]) -> Rational + Send + Sync;

/// A degree-`n` cochain `Γⁿ → ℚ`, evaluated lazily.
pub struct Cochain<E> {
    degree: usize,
    eval: Arc<Evaluator<E>>,
    memo: Option<Arc<DashMap<Vec<E>, Rational>>>,
}

impl<E> Clone for Cochain<E> {
    fn clone(&self) -> Self {
        Cochain {
            degree: self.degree,
            eval: self.eval.clone(),
            memo: self.memo.clone(),
        }
    }
}

impl<E> Debug for Cochain<E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cochain(degree {})", self.degree)
    }
}

impl<E> Cochain<E>
where
    E: Clone + Eq + Hash + Send + Sync + 'static,
{
    pub fn new<F>(degree: usize, f: F) -> Self
    where
        F: Fn(&[E]) -> Rational + Send + Sync + 'static,
    {
        Cochain {
            degree,
            eval: Arc::new(f),
            memo: None,
        }
    }

    pub fn constant(degree: usize, c: Rational) -> Self {
        Self::new(degree, move |_| c.clone())
    }

    pub fn zero(degree: usize) -> Self {
        Self::constant(degree, Rational::zero())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Caches every evaluation. Concurrent fills of one key compute the same
    /// value, so the cache stays a function.
    pub fn memoized(mut self) -> Self {
        if self.memo.is_none() {
            self.memo = Some(Arc::new(DashMap::new()));
        }
        self
    }

    pub fn eval(&self, args: &[E]) -> Rational {
        assert_eq!(
            args.len(),
            self.degree,
            "cochain of degree {} evaluated on {} arguments",
            self.degree,
            args.len()
        );
        match &self.memo {
            None => (self.eval)(args),
            Some(memo) => {
                if let Some(v) = memo.get(args) {
                    return v.clone();
                }
                let v = (self.eval)(args);
                memo.insert(args.to_vec(), v.clone());
                v
            }
        }
    }

    pub fn add(&self, other: &Cochain<E>) -> Cochain<E> {
        assert_eq!(self.degree, other.degree);
        let (a, b) = (self.clone(), other.clone());
        Cochain::new(self.degree, move |t| a.eval(t) + b.eval(t))
    }

    pub fn sub(&self, other: &Cochain<E>) -> Cochain<E> {
        assert_eq!(self.degree, other.degree);
        let (a, b) = (self.clone(), other.clone());
        Cochain::new(self.degree, move |t| a.eval(t) - b.eval(t))
    }

    pub fn scale(&self, c: Rational) -> Cochain<E> {
        let a = self.clone();
        Cochain::new(self.degree, move |t| a.eval(t) * &c)
    }
}

impl Cochain<usize> {
    /// Evaluates `f` on every tuple of a finite group once and stores the table.
    pub fn tabulate<F>(group: &FiniteGroup, degree: usize, f: F) -> Self
    where
        F: Fn(&[usize]) -> Rational + Sync,
    {
        let values: Vec<Rational> = (0..group.tuple_count(degree))
            .into_par_iter()
            .map(|i| f(&group.tuple(degree, i)))
            .collect();
        Self::from_table(group, degree, values)
    }

    /// A dense cochain; `values` is indexed by [`FiniteGroup::tuple_index`].
    pub fn from_table(group: &FiniteGroup, degree: usize, values: Vec<Rational>) -> Self {
        assert_eq!(values.len(), group.tuple_count(degree));
        let grp = group.clone();
        let values = Arc::new(values);
        Cochain::new(degree, move |t| values[grp.tuple_index(t)].clone())
    }

    /// Materializes any cochain on a finite group.
    pub fn materialize(&self, group: &FiniteGroup) -> Self {
        Self::tabulate(group, self.degree, |t| self.eval(t))
    }
}

/// The argument list of the `i`-th face, `0 <= i <= n`, of an `n`-tuple:
/// `i = 0` drops the first entry, `i = n` the last, and `0 < i < n`
/// multiplies entries `i-1` and `i`.
pub fn face<G: Group>(group: &G, g: &[G::Elem], i: usize) -> Vec<G::Elem> {
    let n = g.len();
    if i == 0 {
        g[1..].to_vec()
    } else if i == n {
        g[..n - 1].to_vec()
    } else {
        let mut t = Vec::with_capacity(n - 1);
        t.extend_from_slice(&g[..i - 1]);
        t.push(group.multiply(&g[i - 1], &g[i]));
        t.extend_from_slice(&g[i + 1..]);
        t
    }
}

pub fn codifferential<G: Group>(group: &G, omega: &Cochain<G::Elem>) -> Cochain<G::Elem> {
    let grp = group.clone();
    let w = omega.clone();
    Cochain::new(omega.degree + 1, move |g| {
        let m = g.len();
        let mut acc = Rational::zero();
        for i in 0..=m {
            let v = w.eval(&face(&grp, g, i));
            if i % 2 == 0 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        acc
    })
}

/// `(α∪β)(g₁,…,g_{p+q}) = α(g₁,…,g_p)·β(g_{p+1},…,g_{p+q})`.
pub fn cup<E>(alpha: &Cochain<E>, beta: &Cochain<E>) -> Cochain<E>
where
    E: Clone + Eq + Hash + Send + Sync + 'static,
{
    let p = alpha.degree;
    let (a, b) = (alpha.clone(), beta.clone());
    Cochain::new(p + beta.degree, move |g| {
        let x = a.eval(&g[..p]);
        if x.is_zero() {
            return x;
        }
        x * b.eval(&g[p..])
    })
}

/// `α∪α∪…∪α` with `k >= 1` factors.
pub fn cup_power<E>(alpha: &Cochain<E>, k: usize) -> Cochain<E>
where
    E: Clone + Eq + Hash + Send + Sync + 'static,
{
    assert!(k >= 1);
    (1..k).fold(alpha.clone(), |acc, _| cup(&acc, alpha))
}

/// `(ψ*ω)(v₁,…,v_n) = ω(ψv₁,…,ψv_n)`.
pub fn pullback<S: Group, T: Group>(
    omega: &Cochain<T::Elem>,
    psi: &Homomorphism<S, T>,
) -> Cochain<S::Elem> {
    let w = omega.clone();
    let psi = psi.clone();
    Cochain::new(omega.degree, move |v| {
        let image: Vec<T::Elem> = v.iter().map(|x| psi.apply(x)).collect();
        w.eval(&image)
    })
}

/// `ω̂(g₁,…,g_n) = ω(g_n⁻¹,…,g₁⁻¹)`.
///
/// Reversing the tuple reverses the order of the faces, so
/// `δ(ω̂) = (-1)^{n+1} (δω)^` for `ω` of degree `n`. See [`hat_chain_map`]
/// for the signed version commuting with `δ` on the nose.
pub fn hat_involution<G: Group>(group: &G, omega: &Cochain<G::Elem>) -> Cochain<G::Elem> {
    let grp = group.clone();
    let w = omega.clone();
    Cochain::new(omega.degree, move |g| {
        let t: Vec<G::Elem> = g.iter().rev().map(|x| grp.invert(x)).collect();
        w.eval(&t)
    })
}

/// `(-1)^{n(n+1)/2} ω̂`: an involution with `δ ∘ hat = hat ∘ δ` exactly.
pub fn hat_chain_map<G: Group>(group: &G, omega: &Cochain<G::Elem>) -> Cochain<G::Elem> {
    let n = omega.degree;
    let h = hat_involution(group, omega);
    if (n * (n + 1) / 2) % 2 == 0 {
        h
    } else {
        h.scale(rat(-1))
    }
}

/// A finite integer combination of `n`-tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain<E: Hash + Eq> {
    degree: usize,
    terms: IndexMap<Vec<E>, i64>,
}

impl<E: Clone + Hash + Eq> Chain<E> {
    pub fn new(degree: usize) -> Self {
        Chain {
            degree,
            terms: IndexMap::new(),
        }
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Vec<E>)>,
    {
        let mut c = Chain::new(degree);
        for (k, t) in terms {
            c.push(k, t)?;
        }
        Ok(c)
    }

    /// Adds `coeff · (tuple)`, merging equal tuples and dropping zeros.
    pub fn push(&mut self, coeff: i64, tuple: Vec<E>) -> Result<()> {
        if tuple.len() != self.degree {
            return Err(Error::ArityMismatch {
                expected: self.degree,
                got: tuple.len(),
            });
        }
        match self.terms.get_mut(&tuple) {
            Some(k) => {
                *k += coeff;
                if *k == 0 {
                    self.terms.shift_remove(&tuple);
                }
            }
            None if coeff != 0 => {
                self.terms.insert(tuple, coeff);
            }
            None => {}
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &[E])> + '_ {
        self.terms.iter().map(|(t, &k)| (k, t.as_slice()))
    }
}

/// `⟨ω, c⟩ = Σ coeff · ω(tuple)`, summed in parallel on the current rayon pool.
pub fn pair<E>(omega: &Cochain<E>, chain: &Chain<E>) -> Result<Rational>
where
    E: Clone + Eq + Hash + Send + Sync + 'static,
{
    if omega.degree != chain.degree {
        return Err(Error::DegreeMismatch {
            cochain: omega.degree,
            chain: chain.degree,
        });
    }
    let terms: Vec<(&Vec<E>, &i64)> = chain.terms.iter().collect();
    Ok(terms
        .par_iter()
        .map(|(t, &k)| omega.eval(t) * rat(k))
        .reduce(Rational::zero, |a, b| a + b))
}

/// `ζ_m = Σ_σ sgn(σ) (e_{σ(1)}|…|e_{σ(m)})` over `ℤ^m`, for `m ∈ {2,4,6,8}`.
pub fn zeta(m: usize) -> Result<Chain<Vec<i64>>> {
    if !matches!(m, 2 | 4 | 6 | 8) {
        return Err(Error::ZetaOutOfRange(m));
    }
    let z = crate::group::make_free_abelian(m)?;
    Chain::from_terms(
        m,
        perm::permutations(m).into_iter().map(|p| {
            let s = perm::sign(&p);
            (s, p.into_iter().map(|i| z.basis(i)).collect())
        }),
    )
}

/// Where a probe's inputs come from.
#[derive(Clone, Debug)]
pub enum Samples<E> {
    /// Every `p`-tuple of a finite group.
    All,
    List(Vec<Vec<E>>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bound {
    /// The true supremum.
    Exact,
    /// A supremum over a finite sample, hence a lower bound for the true one.
    LowerBound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Probe {
    pub sup: Rational,
    pub bound: Bound,
    pub evaluated: usize,
}

/// `max |ω(g₁,…,g_p, tail)|` over the sampled leading arguments.
pub fn probe_p_bounded<G: Group>(
    group: &G,
    omega: &Cochain<G::Elem>,
    p: usize,
    tail: &[G::Elem],
    samples: &Samples<G::Elem>,
) -> Result<Probe> {
    let n = omega.degree;
    if p == 0 || p > n || p + tail.len() != n {
        return Err(Error::ProbeRange { p, degree: n });
    }
    let eval = |lead: &[G::Elem]| {
        let mut t = lead.to_vec();
        t.extend_from_slice(tail);
        omega.eval(&t).abs()
    };
    match samples {
        Samples::All => {
            let elems = group.elements().ok_or(Error::InfiniteGroup)?;
            let k = elems.len();
            let count = k.pow(p as u32);
            let sup = (0..count)
                .into_par_iter()
                .map(|mut i| {
                    let lead: Vec<G::Elem> = (0..p)
                        .map(|_| {
                            let e = elems[i % k].clone();
                            i /= k;
                            e
                        })
                        .collect();
                    eval(&lead)
                })
                .max()
                .unwrap_or_else(Rational::zero);
            Ok(Probe {
                sup,
                bound: Bound::Exact,
                evaluated: count,
            })
        }
        Samples::List(list) => {
            for s in list {
                if s.len() != p {
                    return Err(Error::ArityMismatch {
                        expected: p,
                        got: s.len(),
                    });
                }
            }
            let sup = list
                .par_iter()
                .map(|s| eval(s))
                .max()
                .unwrap_or_else(Rational::zero);
            Ok(Probe {
                sup,
                // a list covering a finite group would still only be reported as sampled
                bound: Bound::LowerBound,
                evaluated: list.len(),
            })
        }
    }
}

/// Wire form of a chain: `{"degree": n, "terms": [{"coeff": k, "tuple": [...]}]}`.
#[derive(Serialize, Deserialize)]
pub struct ChainJson<E> {
    pub degree: usize,
    pub terms: Vec<TermJson<E>>,
}

#[derive(Serialize, Deserialize)]
pub struct TermJson<E> {
    pub coeff: i64,
    pub tuple: Vec<E>,
}

impl<E: Clone + Hash + Eq> Chain<E> {
    pub fn to_json(&self) -> ChainJson<E> {
        ChainJson {
            degree: self.degree,
            terms: self
                .terms()
                .map(|(coeff, t)| TermJson {
                    coeff,
                    tuple: t.to_vec(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: ChainJson<E>) -> Result<Self> {
        Chain::from_terms(
            json.degree,
            json.terms.into_iter().map(|t| (t.coeff, t.tuple)),
        )
    }
}
