//! Group backends.
//!
//! Elements are plain values: finite groups use indices into a Cayley table,
//! free abelian groups integer vectors, and `F'` piecewise-linear maps.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm;
use crate::rational::{rat, Rational};
use crate::thompson::PLMap;

pub trait Group: Clone + Send + Sync + 'static {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync + 'static;

    fn identity(&self) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn invert(&self, a: &Self::Elem) -> Self::Elem;

    /// Every element exactly once, identity included. `None` for infinite groups.
    fn elements(&self) -> Option<&[Self::Elem]> {
        None
    }

    fn is_finite(&self) -> bool {
        self.elements().is_some()
    }

    fn name(&self) -> String;

    fn label(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }

    fn pow(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        let mut base = if k < 0 { self.invert(a) } else { a.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = self.identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    fn product<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
    {
        items
            .into_iter()
            .fold(self.identity(), |acc, x| self.multiply(&acc, x))
    }
}

#[derive(Debug)]
struct Table {
    name: String,
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    labels: Vec<String>,
    elems: Vec<usize>,
}

/// A finite group stored as a Cayley table. Element `0` is the identity.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    table: Arc<Table>,
}

impl FiniteGroup {
    /// Builds the table from any element list whose first entry is the identity.
    pub fn from_elements<T, M, L>(name: &str, elems: Vec<T>, mul: M, label: L) -> Self
    where
        T: Clone + Eq + Hash,
        M: Fn(&T, &T) -> T,
        L: Fn(&T) -> String,
    {
        let order = elems.len();
        let index: HashMap<T, usize> = elems
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let mut table = vec![0; order * order];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                table[i * order + j] = index[&mul(a, b)];
            }
        }
        let inv = (0..order)
            .map(|i| {
                (0..order)
                    .find(|&j| table[i * order + j] == 0)
                    .expect("group table without inverse")
            })
            .collect();
        FiniteGroup {
            table: Arc::new(Table {
                name: name.to_string(),
                order,
                mul: table,
                inv,
                labels: elems.iter().map(label).collect(),
                elems: (0..order).collect(),
            }),
        }
    }

    pub fn order(&self) -> usize {
        self.table.order
    }

    pub fn all(&self) -> &[usize] {
        &self.table.elems
    }

    /// Number of `n`-tuples, `|G|^n`.
    pub fn tuple_count(&self, n: usize) -> usize {
        self.order().pow(n as u32)
    }

    /// The `index`-th `n`-tuple in little-endian base-`|G|` order.
    pub fn tuple(&self, n: usize, mut index: usize) -> Vec<usize> {
        let k = self.order();
        (0..n)
            .map(|_| {
                let e = index % k;
                index /= k;
                e
            })
            .collect()
    }

    pub fn tuple_index(&self, t: &[usize]) -> usize {
        let k = self.order();
        t.iter().rev().fold(0, |acc, &e| acc * k + e)
    }

    pub fn tuples(&self, n: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.tuple_count(n)).map(move |i| self.tuple(n, i))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.multiply(&x, &a);
            k += 1;
        }
        k
    }
}

impl Group for FiniteGroup {
    type Elem = usize;

    fn identity(&self) -> usize {
        0
    }

    fn multiply(&self, a: &usize, b: &usize) -> usize {
        self.table.mul[a * self.table.order + b]
    }

    fn invert(&self, a: &usize) -> usize {
        self.table.inv[*a]
    }

    fn elements(&self) -> Option<&[usize]> {
        Some(&self.table.elems)
    }

    fn name(&self) -> String {
        self.table.name.clone()
    }

    fn label(&self, a: &usize) -> String {
        self.table.labels[*a].clone()
    }
}

/// `ℤ/n`; element `k` is the residue `k`.
pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    Ok(FiniteGroup::from_elements(
        &format!("c{n}"),
        (0..n).collect(),
        |a, b| (a + b) % n,
        |a| a.to_string(),
    ))
}

/// `S_n` for `1 <= n <= 4`, product `(στ)(i) = σ(τ(i))`.
pub fn make_symmetric(n: usize) -> Result<FiniteGroup> {
    if !(1..=4).contains(&n) {
        return Err(Error::SymmetricOutOfRange(n));
    }
    Ok(FiniteGroup::from_elements(
        &format!("s{n}"),
        perm::permutations(n),
        |s: &Vec<usize>, t: &Vec<usize>| t.iter().map(|&i| s[i]).collect(),
        |s| {
            let body: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
            format!("[{}]", body.join(""))
        },
    ))
}

/// `ℤ^d`, written additively.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeAbelian {
    dim: usize,
}

pub fn make_free_abelian(d: usize) -> Result<FreeAbelian> {
    if d == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(FreeAbelian { dim: d })
}

impl FreeAbelian {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The standard basis vector `e_{i+1}`.
    pub fn basis(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }
}

impl Group for FreeAbelian {
    type Elem = Vec<i64>;

    fn identity(&self) -> Vec<i64> {
        vec![0; self.dim]
    }

    fn multiply(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn invert(&self, a: &Vec<i64>) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }

    fn name(&self) -> String {
        format!("z{}", self.dim)
    }

    fn pow(&self, a: &Vec<i64>, k: i64) -> Vec<i64> {
        a.iter().map(|x| x * k).collect()
    }
}

/// The commutator subgroup `F' = [F, F]` of Thompson's group, with
/// product `a · b = a ∘ b`.
///
/// The backend does not police membership; maps built from the `F'`
/// generators by products and inverses stay inside `F'`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FPrime;

impl Group for FPrime {
    type Elem = PLMap;

    fn identity(&self) -> PLMap {
        PLMap::identity()
    }

    fn multiply(&self, a: &PLMap, b: &PLMap) -> PLMap {
        a.compose(b)
    }

    fn invert(&self, a: &PLMap) -> PLMap {
        a.inverse()
    }

    fn name(&self) -> String {
        "fprime".into()
    }

    fn label(&self, a: &PLMap) -> String {
        a.to_string()
    }
}

type MapFn<S, T> = dyn Fn(&<S as Group>::Elem) -> <T as Group>::Elem + Send + Sync;

/// A group homomorphism `source → target`.
pub struct Homomorphism<S: Group, T: Group> {
    source: S,
    target: T,
    map: Arc<MapFn<S, T>>,
}

impl<S: Group, T: Group> Clone for Homomorphism<S, T> {
    fn clone(&self) -> Self {
        Homomorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            map: self.map.clone(),
        }
    }
}

impl<S: Group, T: Group> Homomorphism<S, T> {
    /// Wraps a map without checking it.
    pub fn new_unchecked<F>(source: S, target: T, map: F) -> Self
    where
        F: Fn(&S::Elem) -> T::Elem + Send + Sync + 'static,
    {
        Homomorphism {
            source,
            target,
            map: Arc::new(map),
        }
    }

    /// Wraps a map on a finite source, checking `ψ(ab) = ψ(a)ψ(b)` on every pair.
    pub fn new_checked<F>(source: S, target: T, map: F) -> Result<Self>
    where
        F: Fn(&S::Elem) -> T::Elem + Send + Sync + 'static,
    {
        let hom = Self::new_unchecked(source, target, map);
        let elems = hom.source.elements().ok_or(Error::InfiniteGroup)?.to_vec();
        for a in &elems {
            for b in &elems {
                if !hom.respects(a, b) {
                    return Err(Error::NotHomomorphism(vec![
                        hom.source.label(a),
                        hom.source.label(b),
                    ]));
                }
            }
        }
        Ok(hom)
    }

    pub fn apply(&self, a: &S::Elem) -> T::Elem {
        (self.map)(a)
    }

    pub fn source(&self) -> &S {
        &self.source
    }

    pub fn target(&self) -> &T {
        &self.target
    }

    pub fn respects(&self, a: &S::Elem, b: &S::Elem) -> bool {
        let lhs = self.apply(&self.source.multiply(a, b));
        let rhs = self.target.multiply(&self.apply(a), &self.apply(b));
        lhs == rhs
    }
}

/// `ψ: ℤ^d → target` with `ψ(e_i) = images[i]`.
///
/// The images must commute pairwise; the first offending pair is reported.
pub fn homomorphism_from_generators<T: Group>(
    source: &FreeAbelian,
    images: Vec<T::Elem>,
    target: &T,
) -> Result<Homomorphism<FreeAbelian, T>> {
    if images.len() != source.dim() {
        return Err(Error::WrongImageCount {
            expected: source.dim(),
            got: images.len(),
        });
    }
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            let ab = target.multiply(&images[i], &images[j]);
            let ba = target.multiply(&images[j], &images[i]);
            if ab != ba {
                return Err(Error::NonCommuting(i, j));
            }
        }
    }
    let t = target.clone();
    Ok(Homomorphism::new_unchecked(
        *source,
        target.clone(),
        move |v: &Vec<i64>| {
            v.iter()
                .zip(&images)
                .filter(|(k, _)| **k != 0)
                .fold(t.identity(), |acc, (&k, img)| {
                    t.multiply(&acc, &t.pow(img, k))
                })
        },
    ))
}

/// The uniform (right- and left-invariant) mean of a finite group.
#[derive(Debug, Clone)]
pub struct Mean<G: Group> {
    group: G,
}

impl<G: Group> Mean<G> {
    pub fn uniform(group: &G) -> Result<Self> {
        if !group.is_finite() {
            return Err(Error::InfiniteGroup);
        }
        Ok(Mean {
            group: group.clone(),
        })
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn average<F>(&self, f: F) -> Rational
    where
        F: Fn(&G::Elem) -> Rational,
    {
        let elems = self.group.elements().expect("finite by construction");
        let total: Rational = elems.iter().map(f).sum();
        total / rat(elems.len() as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::thompson::{f, g};
    use rand::{Rng, SeedableRng};

    #[test]
    fn cyclic_basics() {
        assert_eq!(make_cyclic(0).unwrap_err(), Error::ZeroOrder);
        let c1 = make_cyclic(1).unwrap();
        assert_eq!(c1.elements().unwrap(), &[0]);
        let c6 = make_cyclic(6).unwrap();
        assert_eq!(c6.multiply(&2, &5), 1);
        let c12 = make_cyclic(12).unwrap();
        for a in c12.all() {
            assert_eq!(c12.multiply(a, &c12.invert(a)), 0);
            assert_eq!(c12.multiply(&c12.invert(a), a), 0);
        }
    }

    #[test]
    fn symmetric_basics() {
        assert!(make_symmetric(0).is_err());
        assert_eq!(
            make_symmetric(5).unwrap_err(),
            Error::SymmetricOutOfRange(5)
        );
        assert_eq!(make_symmetric(1).unwrap().order(), 1);

        let s3 = make_symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        let involutions = s3
            .all()
            .iter()
            .filter(|&&a| s3.element_order(a) == 2)
            .count();
        assert_eq!(involutions, 3);

        let s4 = make_symmetric(4).unwrap();
        assert_eq!(s4.order(), 24);
        let center: Vec<usize> = s4
            .all()
            .iter()
            .copied()
            .filter(|a| {
                s4.all()
                    .iter()
                    .all(|b| s4.multiply(a, b) == s4.multiply(b, a))
            })
            .collect();
        assert_eq!(center, vec![0]);
    }

    #[test]
    fn finite_group_axioms() {
        for grp in [
            make_cyclic(7).unwrap(),
            make_symmetric(3).unwrap(),
            make_symmetric(4).unwrap(),
        ] {
            let e = grp.all();
            assert_eq!(e.len(), grp.order());
            for a in e {
                assert_eq!(grp.multiply(a, &0), *a);
                assert_eq!(grp.multiply(&0, a), *a);
                for b in e {
                    for c in e {
                        assert_eq!(
                            grp.multiply(&grp.multiply(a, b), c),
                            grp.multiply(a, &grp.multiply(b, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tuple_indexing() {
        let s3 = make_symmetric(3).unwrap();
        for i in 0..s3.tuple_count(3) {
            assert_eq!(s3.tuple_index(&s3.tuple(3, i)), i);
        }
        assert_eq!(s3.tuples(0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn free_abelian() {
        assert_eq!(make_free_abelian(0).unwrap_err(), Error::ZeroRank);
        let z2 = make_free_abelian(2).unwrap();
        assert_eq!(z2.multiply(&z2.basis(0), &z2.basis(1)), vec![1, 1]);
        let z4 = make_free_abelian(4).unwrap();
        assert_eq!(z4.invert(&vec![1, -2, 0, 3]), vec![-1, 2, 0, -3]);
        assert!(!z4.is_finite());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let a: Vec<i64> = (0..2).map(|_| rng.gen_range(-50..=50)).collect();
            let b: Vec<i64> = (0..2).map(|_| rng.gen_range(-50..=50)).collect();
            assert_eq!(z2.multiply(&a, &b), z2.multiply(&b, &a));
        }
    }

    #[test]
    fn generic_pow_matches_repeated_product() {
        let s4 = make_symmetric(4).unwrap();
        for a in s4.all() {
            let mut acc = 0;
            for k in 0..10 {
                assert_eq!(s4.pow(a, k), acc);
                acc = s4.multiply(&acc, a);
            }
            assert_eq!(s4.pow(a, -3), s4.invert(&s4.pow(a, 3)));
        }
    }

    #[test]
    fn psi_from_generators() {
        let z2 = make_free_abelian(2).unwrap();
        let psi = homomorphism_from_generators(&z2, vec![f(), g()], &FPrime).unwrap();
        assert_eq!(psi.apply(&vec![1, 0]), f());
        assert_eq!(psi.apply(&vec![0, 1]), g());

        let trivial =
            homomorphism_from_generators(&z2, vec![PLMap::identity(), PLMap::identity()], &FPrime)
                .unwrap();
        assert_eq!(trivial.apply(&vec![5, -3]), PLMap::identity());

        let ff = f().compose(&f());
        let psi = homomorphism_from_generators(&z2, vec![f(), ff], &FPrime).unwrap();
        let f4 = f().compose(&f()).compose(&f()).compose(&f());
        assert_eq!(psi.apply(&vec![2, 1]), f4);

        let v = vec![vec![1, 2], vec![-1, 0], vec![3, -2], vec![0, 0]];
        for a in &v {
            for b in &v {
                assert!(psi.respects(a, b));
            }
        }
    }

    #[test]
    fn non_commuting_images_rejected() {
        let z3 = make_free_abelian(3).unwrap();
        // supports of f and f*1 overlap on [1/8, 1/4]
        let h = crate::thompson::parse_element("f*1").unwrap();
        let err = homomorphism_from_generators(&z3, vec![f(), g(), h], &FPrime);
        assert_eq!(err.err(), Some(Error::NonCommuting(0, 2)));
        let err = homomorphism_from_generators(&z3, vec![f()], &FPrime);
        assert!(matches!(err, Err(Error::WrongImageCount { .. })));
    }

    #[test]
    fn checked_homomorphism_between_finite_groups() {
        let c6 = make_cyclic(6).unwrap();
        let c3 = make_cyclic(3).unwrap();
        assert!(Homomorphism::new_checked(c6.clone(), c3.clone(), |k| k % 3).is_ok());
        // k ↦ k mod 4 is not a homomorphism ℤ/6 → ℤ/4
        let c4 = make_cyclic(4).unwrap();
        assert!(Homomorphism::new_checked(c6, c4, |k| k % 4).is_err());
    }

    #[test]
    fn uniform_mean_is_right_invariant() {
        assert!(Mean::uniform(&FPrime).is_err());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for grp in [
            make_cyclic(5).unwrap(),
            make_symmetric(3).unwrap(),
            make_symmetric(4).unwrap(),
        ] {
            let mean = Mean::uniform(&grp).unwrap();
            for _ in 0..5 {
                let vals: Vec<Rational> = (0..grp.order())
                    .map(|_| rat(rng.gen_range(-9..=9)))
                    .collect();
                let m = mean.average(|h| vals[*h].clone());
                for gg in grp.all() {
                    assert_eq!(mean.average(|h| vals[grp.multiply(h, gg)].clone()), m);
                }
            }
        }
    }
}
