use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::dyadic::Dyadic;
use crate::error::{Error, Result};

/// A piecewise-linear homeomorphism of `[0,1]` with dyadic breakpoints and
/// power-of-two slopes, i.e. an element of Thompson's group `F`.
///
/// Stored canonically: vertices `(0,0) = p_0 < .. < p_m = (1,1)` with no
/// vertex where the slopes on both sides agree, and one `log2` slope per
/// segment.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PLMap {
    points: Vec<(Dyadic, Dyadic)>,
    slopes: Vec<i64>,
}

fn check_points(points: &[(Dyadic, Dyadic)]) -> Result<Vec<i64>> {
    let bad = |m: String| Error::InvalidBreakpoints(m);
    if points.len() < 2 {
        return Err(bad("need at least the two endpoints".into()));
    }
    let (first, last) = (&points[0], &points[points.len() - 1]);
    if !(first.0.is_zero() && first.1.is_zero()) {
        return Err(bad(format!(
            "first point must be (0,0), got ({}, {})",
            first.0, first.1
        )));
    }
    if !(last.0 == Dyadic::one() && last.1 == Dyadic::one()) {
        return Err(bad(format!(
            "last point must be (1,1), got ({}, {})",
            last.0, last.1
        )));
    }
    points
        .windows(2)
        .map(|w| {
            let dx = &w[1].0 - &w[0].0;
            let dy = &w[1].1 - &w[0].1;
            if !dx.is_positive() || !dy.is_positive() {
                return Err(bad(format!(
                    "points ({}, {}) and ({}, {}) are not strictly increasing",
                    w[0].0, w[0].1, w[1].0, w[1].1
                )));
            }
            dy.log2_ratio(&dx).ok_or_else(|| {
                bad(format!(
                    "slope between x = {} and x = {} is not a power of two",
                    w[0].0, w[1].0
                ))
            })
        })
        .collect()
}

/// True when the breakpoint list describes an element of `F`.
pub fn is_in_f(points: &[(Dyadic, Dyadic)]) -> bool {
    check_points(points).is_ok()
}

/// True when the breakpoint list describes an element of `F'`: in `F`, and
/// the identity on a neighbourhood of both endpoints.
pub fn is_in_f_prime(points: &[(Dyadic, Dyadic)]) -> bool {
    match check_points(points) {
        Ok(slopes) => slopes[0] == 0 && slopes[slopes.len() - 1] == 0,
        Err(_) => false,
    }
}

impl PLMap {
    pub fn identity() -> Self {
        PLMap {
            points: vec![
                (Dyadic::zero(), Dyadic::zero()),
                (Dyadic::one(), Dyadic::one()),
            ],
            slopes: vec![0],
        }
    }

    /// Validates and canonicalizes a vertex list.
    pub fn from_points(points: Vec<(Dyadic, Dyadic)>) -> Result<Self> {
        let slopes = check_points(&points)?;
        Ok(Self::canonical(points, slopes))
    }

    fn canonical(points: Vec<(Dyadic, Dyadic)>, slopes: Vec<i64>) -> Self {
        let mut keep_pts = Vec::with_capacity(points.len());
        let mut keep_slopes: Vec<i64> = Vec::with_capacity(slopes.len());
        let mut pts = points.into_iter();
        keep_pts.push(pts.next().expect("nonempty"));
        for (p, s) in pts.zip(slopes) {
            if keep_slopes.last() == Some(&s) {
                keep_pts.pop();
            } else {
                keep_slopes.push(s);
            }
            keep_pts.push(p);
        }
        PLMap {
            points: keep_pts,
            slopes: keep_slopes,
        }
    }

    pub fn points(&self) -> &[(Dyadic, Dyadic)] {
        &self.points
    }

    /// `log2` slope of each segment, left to right.
    pub fn slopes_log2(&self) -> &[i64] {
        &self.slopes
    }

    pub fn is_identity(&self) -> bool {
        self.slopes == [0]
    }

    pub fn is_in_f_prime(&self) -> bool {
        self.slopes[0] == 0 && self.slopes[self.slopes.len() - 1] == 0
    }

    /// Interior x-coordinates where the slope changes.
    pub fn breakpoints(&self) -> impl Iterator<Item = &Dyadic> + '_ {
        self.points[1..self.points.len() - 1].iter().map(|(x, _)| x)
    }

    /// Index of the segment `[x_i, x_{i+1}]` containing `x`, preferring the
    /// right-hand segment at a vertex.
    fn segment_right(&self, x: &Dyadic) -> usize {
        let i = self.points.partition_point(|(px, _)| px <= x);
        i.saturating_sub(1).min(self.slopes.len() - 1)
    }

    fn segment_left(&self, x: &Dyadic) -> usize {
        let i = self.points.partition_point(|(px, _)| px < x);
        i.saturating_sub(1).min(self.slopes.len() - 1)
    }

    pub fn eval(&self, x: &Dyadic) -> Dyadic {
        let i = self.segment_right(x);
        let (x0, y0) = &self.points[i];
        &(x - x0).mul_pow2(self.slopes[i]) + y0
    }

    pub fn eval_inverse(&self, y: &Dyadic) -> Dyadic {
        let i = self.points.partition_point(|(_, py)| py <= y);
        let i = i.saturating_sub(1).min(self.slopes.len() - 1);
        let (x0, y0) = &self.points[i];
        &(y - y0).mul_pow2(-self.slopes[i]) + x0
    }

    /// `log2` of the left derivative; at `0` the slope of the first segment.
    pub fn left_slope_log2(&self, x: &Dyadic) -> i64 {
        self.slopes[self.segment_left(x)]
    }

    /// `log2` of the right derivative; at `1` the slope of the last segment.
    pub fn right_slope_log2(&self, x: &Dyadic) -> i64 {
        self.slopes[self.segment_right(x)]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PLMap) -> PLMap {
        let mut xs: Vec<Dyadic> = other.points.iter().map(|(x, _)| x.clone()).collect();
        xs.extend(self.points.iter().map(|(x, _)| other.eval_inverse(x)));
        xs.sort();
        xs.dedup();
        let points: Vec<(Dyadic, Dyadic)> = xs
            .into_iter()
            .map(|x| {
                let y = self.eval(&other.eval(&x));
                (x, y)
            })
            .collect();
        let slopes = points
            .windows(2)
            .map(|w| {
                let i = other.segment_right(&w[0].0);
                let j = self.segment_right(&other.eval(&w[0].0));
                other.slopes[i] + self.slopes[j]
            })
            .collect();
        Self::canonical(points, slopes)
    }

    pub fn inverse(&self) -> PLMap {
        PLMap {
            points: self
                .points
                .iter()
                .map(|(x, y)| (y.clone(), x.clone()))
                .collect(),
            slopes: self.slopes.iter().map(|s| -s).collect(),
        }
    }

    /// `a * b`: rescaled `a` on `[0,1/2]` followed by rescaled `b` on `[1/2,1]`.
    pub fn star(&self, other: &PLMap) -> PLMap {
        let half = Dyadic::new(1, 1);
        let mut points: Vec<(Dyadic, Dyadic)> = self
            .points
            .iter()
            .map(|(x, y)| (x.half(), y.half()))
            .collect();
        points.pop();
        points.extend(
            other
                .points
                .iter()
                .map(|(x, y)| (&x.half() + &half, &y.half() + &half)),
        );
        let slopes = self.slopes.iter().chain(&other.slopes).copied().collect();
        Self::canonical(points, slopes)
    }
}

impl fmt::Display for PLMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .points
            .iter()
            .map(|(x, y)| format!("({}, {})", x.to_rational(), y.to_rational()))
            .collect();
        write!(f, "{}", body.join(" "))
    }
}

impl fmt::Debug for PLMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PLMap[{self}]")
    }
}

/// JSON list of `[x, y]` pairs of `m/2^k` strings.
impl Serialize for PLMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.points.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PLMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let points = Vec::<(Dyadic, Dyadic)>::deserialize(d)?;
        PLMap::from_points(points).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thompson::{f, g, parse_element};
    use proptest::prelude::*;

    fn d(m: i64, e: u32) -> Dyadic {
        Dyadic::new(m, e)
    }

    fn xy(list: &[(i64, i64)], e: u32) -> Vec<(Dyadic, Dyadic)> {
        list.iter().map(|&(x, y)| (d(x, e), d(y, e))).collect()
    }

    #[test]
    fn built_in_slopes_and_supports() {
        assert_eq!(f().slopes_log2(), &[0, -1, 1, 0]);
        assert_eq!(g().slopes_log2(), &[0, 1, -1, 0]);
        for k in 4..=8 {
            assert_eq!(f().eval(&d(k, 3)), d(k, 3));
        }
        for k in 0..=4 {
            assert_eq!(g().eval(&d(k, 3)), d(k, 3));
        }
        assert!(f().is_in_f_prime() && g().is_in_f_prime());
    }

    #[test]
    fn f_and_g_commute() {
        assert_eq!(f().compose(&g()), g().compose(&f()));
        // slope 2 on both sides of 1/2, so it is not a vertex of f∘g
        let fg = f().compose(&g());
        assert_eq!(fg.points().len(), 6);
        assert_eq!(fg.left_slope_log2(&d(1, 1)), fg.right_slope_log2(&d(1, 1)));
        assert_eq!(PLMap::identity().compose(&g()), g());
        assert_eq!(g().compose(&PLMap::identity()), g());
        assert!(f().compose(&f().inverse()).is_identity());
    }

    #[test]
    fn inverse_swaps_coordinates() {
        assert_eq!(PLMap::identity().inverse(), PLMap::identity());
        let expect = PLMap::from_points(xy(&[(0, 0), (1, 1), (2, 3), (4, 4), (8, 8)], 3)).unwrap();
        assert_eq!(f().inverse(), expect);
        assert_eq!(g().inverse().inverse(), g());
    }

    #[test]
    fn star_products() {
        let id = PLMap::identity();
        assert_eq!(id.star(&id), id);
        let f1 = f().star(&id);
        let expect =
            PLMap::from_points(xy(&[(0, 0), (1, 1), (3, 2), (4, 4), (16, 16)], 4)).unwrap();
        assert_eq!(f1, expect);
        let g1 = id.star(&g());
        assert_eq!(f1.compose(&g1), g1.compose(&f1));
        assert!(f1.is_in_f_prime() && g1.is_in_f_prime());
        // a map outside F' stays outside after starring with it on the left
        let a = PLMap::from_points(xy(&[(0, 0), (2, 1), (3, 2), (4, 4)], 2)).unwrap();
        assert!(!a.is_in_f_prime());
        assert!(!a.star(&id).is_in_f_prime());
    }

    #[test]
    fn membership_tests() {
        assert!(is_in_f(PLMap::identity().points()));
        assert!(is_in_f_prime(PLMap::identity().points()));
        assert!(is_in_f(f().points()) && is_in_f_prime(f().points()));
        // (0,0),(1/2,1/4),(1,1): the second slope is 3/2, not a power of two
        let p = vec![(d(0, 0), d(0, 0)), (d(1, 1), d(1, 2)), (d(1, 0), d(1, 0))];
        assert!(!is_in_f(&p));
        assert!(!is_in_f_prime(&p));
        // slopes 1/2, 1, 2: in F, not the identity near 0
        let q = xy(&[(0, 0), (2, 1), (3, 2), (4, 4)], 2);
        assert!(is_in_f(&q));
        assert!(!is_in_f_prime(&q));
    }

    #[test]
    fn construction_errors() {
        assert!(PLMap::from_points(vec![(d(0, 0), d(0, 0))]).is_err());
        assert!(PLMap::from_points(xy(&[(1, 1), (4, 4)], 2)).is_err());
        assert!(PLMap::from_points(xy(&[(0, 0), (2, 2), (2, 3), (4, 4)], 2)).is_err());
        assert!(PLMap::from_points(xy(&[(0, 0), (2, 3), (4, 3)], 2)).is_err());
    }

    #[test]
    fn canonicalization_drops_collinear_vertices() {
        let m = PLMap::from_points(xy(&[(0, 0), (1, 1), (2, 2), (3, 3), (8, 8)], 3)).unwrap();
        assert_eq!(m, PLMap::identity());
        assert_eq!(m.breakpoints().count(), 0);
    }

    #[test]
    fn one_sided_slopes() {
        let x = d(1, 1);
        assert_eq!(f().left_slope_log2(&x), 1);
        assert_eq!(f().right_slope_log2(&x), 0);
        assert_eq!(g().left_slope_log2(&x), 0);
        assert_eq!(g().right_slope_log2(&x), 1);
        assert_eq!(f().left_slope_log2(&d(1, 2)), -1);
        assert_eq!(f().right_slope_log2(&d(1, 2)), -1);
        assert_eq!(f().left_slope_log2(&d(1, 4)), 0);
    }

    #[test]
    fn json_form() {
        let s = serde_json::to_string(&f()).unwrap();
        assert_eq!(
            s,
            r#"[["0/2^0","0/2^0"],["1/2^3","1/2^3"],["3/2^3","1/2^2"],["1/2^1","1/2^1"],["1/2^0","1/2^0"]]"#
        );
        let back: PLMap = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f());
        assert!(serde_json::from_str::<PLMap>(r#"[["0","0"],["1/2","1/4"],["1","1"]]"#).is_err());
    }

    fn arb_element() -> impl Strategy<Value = PLMap> {
        let gens: Vec<PLMap> = ["f", "g", "f*1", "1*g", "g*f", "(f*g)*1"]
            .iter()
            .map(|s| parse_element(s).unwrap())
            .collect();
        proptest::collection::vec((0..gens.len(), any::<bool>()), 0..6).prop_map(move |word| {
            word.into_iter().fold(PLMap::identity(), |acc, (i, inv)| {
                if inv {
                    acc.compose(&gens[i].inverse())
                } else {
                    acc.compose(&gens[i])
                }
            })
        })
    }

    fn arb_point() -> impl Strategy<Value = Dyadic> {
        (0u32..10).prop_flat_map(|e| (0i64..=(1 << e)).prop_map(move |m| Dyadic::new(m, e)))
    }

    proptest! {
        #[test]
        fn group_axioms(a in arb_element(), b in arb_element(), c in arb_element()) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert!(a.inverse().compose(&a).is_identity());
            prop_assert_eq!(a.compose(&PLMap::identity()), a.clone());
            prop_assert!(a.is_in_f_prime());
        }

        #[test]
        fn compose_is_pointwise(a in arb_element(), b in arb_element(), xs in proptest::collection::vec(arb_point(), 100)) {
            let ab = a.compose(&b);
            for x in &xs {
                prop_assert_eq!(ab.eval(x), a.eval(&b.eval(x)));
                prop_assert_eq!(a.eval_inverse(&a.eval(x)), x.clone());
            }
        }

        #[test]
        fn chain_rule(a in arb_element(), b in arb_element()) {
            let ab = a.compose(&b);
            let xs: Vec<Dyadic> = ab.breakpoints().chain(b.breakpoints()).cloned().collect();
            for x in xs {
                let bx = b.eval(&x);
                prop_assert_eq!(ab.right_slope_log2(&x), a.right_slope_log2(&bx) + b.right_slope_log2(&x));
                prop_assert_eq!(ab.left_slope_log2(&x), a.left_slope_log2(&bx) + b.left_slope_log2(&x));
            }
        }

        #[test]
        fn canonical_breakpoints(a in arb_element(), b in arb_element()) {
            let ab = a.compose(&b);
            for x in ab.breakpoints() {
                prop_assert_ne!(ab.left_slope_log2(x), ab.right_slope_log2(x));
            }
            let back = PLMap::from_points(ab.points().to_vec()).unwrap();
            prop_assert_eq!(back, ab);
        }
    }
}
