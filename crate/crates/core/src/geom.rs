//! Exact planar primitives: points, canonical lines, collinearity.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{format_scalar, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Point2 { x, y }
    }

    /// Point from integer coordinates.
    pub fn int(x: i64, y: i64) -> Self {
        Point2::new(T::from_int(x), T::from_int(y))
    }

    pub fn parse(x: &str, y: &str) -> Result<Self> {
        Ok(Point2::new(T::parse_scalar(x)?, T::parse_scalar(y)?))
    }

    pub fn to_big(&self) -> Point2<BigRational> {
        Point2::new(self.x.to_big_rational(), self.y.to_big_rational())
    }
}

impl<T: Scalar> fmt::Display for Point2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_scalar(&self.x), format_scalar(&self.y))
    }
}

impl<T: Scalar> Serialize for Point2<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [format_scalar(&self.x), format_scalar(&self.y)].serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Point2<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[RationalRepr; 2]>::deserialize(d)?;
        let x = x.parse::<T>().map_err(serde::de::Error::custom)?;
        let y = y.parse::<T>().map_err(serde::de::Error::custom)?;
        Ok(Point2::new(x, y))
    }
}

/// A rational as it may appear in JSON: a `"p/q"` string or a bare integer.
#[derive(Deserialize)]
#[serde(untagged)]
pub(crate) enum RationalRepr {
    Text(String),
    Int(i64),
}

impl RationalRepr {
    pub(crate) fn parse<T: Scalar>(&self) -> Result<T> {
        match self {
            RationalRepr::Text(s) => T::parse_scalar(s),
            RationalRepr::Int(v) => Ok(T::from_int(*v)),
        }
    }
}

/// Twice the signed area of the triangle `pqr`.
pub fn orient<T: Scalar>(p: &Point2<T>, q: &Point2<T>, r: &Point2<T>) -> T {
    let dx1 = q.x.clone() - p.x.clone();
    let dy1 = q.y.clone() - p.y.clone();
    let dx2 = r.x.clone() - p.x.clone();
    let dy2 = r.y.clone() - p.y.clone();
    dx1 * dy2 - dy1 * dx2
}

/// True iff one line contains all three points. Repeated points count as collinear.
pub fn are_collinear<T: Scalar>(p: &Point2<T>, q: &Point2<T>, r: &Point2<T>) -> bool {
    orient(p, q, r).is_zero()
}

/// The locus `a·x + b·y = c` with coprime integer coefficients, `(a, b) ≠ (0, 0)`,
/// and the first nonzero of `a, b` positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Line {
    pub fn through<T: Scalar>(p: &Point2<T>, q: &Point2<T>) -> Result<Line> {
        if p == q {
            return Err(Error::IdenticalPoints);
        }
        let (p, q) = (p.to_big(), q.to_big());
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = &a * &p.x + &b * &p.y;
        Ok(Line::from_rational_coeffs(a, b, c))
    }

    /// Canonicalises arbitrary coefficients. Panics if `a = b = 0`.
    pub fn from_coeffs(a: BigInt, b: BigInt, c: BigInt) -> Line {
        assert!(!(a.is_zero() && b.is_zero()), "degenerate line");
        let g = a.gcd(&b).gcd(&c);
        let (mut a, mut b, mut c) = (a / &g, b / &g, c / &g);
        let lead = if a.is_zero() { &b } else { &a };
        if lead.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        Line { a, b, c }
    }

    fn from_rational_coeffs(a: BigRational, b: BigRational, c: BigRational) -> Line {
        let l = a.denom().lcm(b.denom()).lcm(c.denom());
        let scale = |r: BigRational| (r * BigRational::from_integer(l.clone())).to_integer();
        Line::from_coeffs(scale(a), scale(b), scale(c))
    }

    pub fn coeffs(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    pub fn contains<T: Scalar>(&self, p: &Point2<T>) -> bool {
        let p = p.to_big();
        let a = BigRational::from_integer(self.a.clone());
        let b = BigRational::from_integer(self.b.clone());
        a * p.x + b * p.y == BigRational::from_integer(self.c.clone())
    }

    /// Same direction (including equal lines).
    pub fn is_parallel_to(&self, other: &Line) -> bool {
        (&self.a * &other.b - &self.b * &other.a).is_zero()
    }

    /// True iff the two point sets share at least one point of the plane.
    pub fn meets(&self, other: &Line) -> bool {
        self == other || !self.is_parallel_to(other)
    }
}

impl Serialize for Line {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a.to_string(), self.b.to_string(), self.c.to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Line {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = <[String; 3]>::deserialize(d)?;
        let mut v = Vec::with_capacity(3);
        for r in &raw {
            v.push(
                r.trim()
                    .parse::<BigInt>()
                    .map_err(|_| D::Error::custom(format!("invalid coefficient {r:?}")))?,
            );
        }
        if v[0].is_zero() && v[1].is_zero() {
            return Err(D::Error::custom("degenerate line"));
        }
        let c = v.pop().unwrap();
        let b = v.pop().unwrap();
        let a = v.pop().unwrap();
        Ok(Line::from_coeffs(a, b, c))
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y = {}", self.a, self.b, self.c)
    }
}

/// `x ↦ M·x + t` with an invertible 2×2 matrix `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap<T> {
    m: [[T; 2]; 2],
    t: [T; 2],
}

impl<T: Scalar> AffineMap<T> {
    /// Returns `None` when the linear part is singular.
    pub fn new(m: [[T; 2]; 2], t: [T; 2]) -> Option<Self> {
        let det = m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone();
        (!det.is_zero()).then_some(AffineMap { m, t })
    }

    pub fn identity() -> Self {
        AffineMap {
            m: [[T::one(), T::zero()], [T::zero(), T::one()]],
            t: [T::zero(), T::zero()],
        }
    }

    pub fn apply(&self, p: &Point2<T>) -> Point2<T> {
        let [[a, b], [c, d]] = &self.m;
        Point2::new(
            a.clone() * p.x.clone() + b.clone() * p.y.clone() + self.t[0].clone(),
            c.clone() * p.x.clone() + d.clone() * p.y.clone() + self.t[1].clone(),
        )
    }
}

impl<T: Scalar> Default for AffineMap<T> {
    fn default() -> Self {
        Self::identity()
    }
}

/// Determinant of the homogeneous 3×3 matrix with rows `(x, y, 1)`.
///
/// Kept separate from [`orient`] so tests can compare two independent routes.
pub fn homogeneous_det<T: Scalar>(p: &Point2<T>, q: &Point2<T>, r: &Point2<T>) -> T {
    let one = T::one();
    let rows = [
        [p.x.clone(), p.y.clone(), one.clone()],
        [q.x.clone(), q.y.clone(), one.clone()],
        [r.x.clone(), r.y.clone(), one],
    ];
    let minor = |i: usize, j: usize, k: usize, l: usize| {
        rows[1][i].clone() * rows[2][j].clone() - rows[1][k].clone() * rows[2][l].clone()
    };
    rows[0][0].clone() * minor(1, 2, 2, 1) - rows[0][1].clone() * minor(0, 2, 2, 0)
        + rows[0][2].clone() * minor(0, 1, 1, 0)
}

impl Line {
    #[cfg(test)]
    pub(crate) fn is_canonical(&self) -> bool {
        let g = self.a.gcd(&self.b).gcd(&self.c);
        let lead = if self.a.is_zero() { &self.b } else { &self.a };
        !(self.a.is_zero() && self.b.is_zero()) && num_traits::One::is_one(&g) && lead.is_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Point;
    use num_rational::Rational64;
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point {
        Point::int(x, y)
    }

    fn coeffs(l: &Line) -> (i64, i64, i64) {
        let (a, b, c) = l.coeffs();
        (
            a.try_into().unwrap(),
            b.try_into().unwrap(),
            c.try_into().unwrap(),
        )
    }

    #[test]
    fn line_through_examples() {
        assert_eq!(coeffs(&Line::through(&p(0, 0), &p(1, 1)).unwrap()), (1, -1, 0));
        assert_eq!(coeffs(&Line::through(&p(2, 2), &p(8, 2)).unwrap()), (0, 1, 2));
        let l = Line::through(&p(6, -6), &p(3, 6)).unwrap();
        assert_eq!(coeffs(&l), (4, 1, 18));
        assert!(l.contains(&p(4, 2)));
        assert_eq!(Line::through(&p(1, 1), &p(1, 1)), Err(Error::IdenticalPoints));
    }

    #[test]
    fn contains_examples() {
        let diag = Line::from_coeffs(1.into(), (-1).into(), 0.into());
        assert!(diag.contains(&p(5, 5)));
        let third = BigRational::from_ratio(1, 3);
        assert!(diag.contains(&Point::new(third.clone(), third)));
        let row = Line::from_coeffs(0.into(), 1.into(), 2.into());
        assert!(!row.contains(&p(4, 4)));
    }

    #[test]
    fn collinearity_examples() {
        assert!(are_collinear(&p(0, 0), &p(3, 1), &p(6, 2)));
        assert!(!are_collinear(&p(0, 0), &p(1, 1), &p(2, 3)));
        assert!(are_collinear(&p(2, 0), &p(1, 1), &p(0, 2)));
        assert!(are_collinear(&p(2, 0), &p(2, 0), &p(7, 3)));
    }

    #[test]
    fn works_over_machine_rationals() {
        let q = |x: i64, y: i64| Point2::<Rational64>::int(x, y);
        assert!(are_collinear(&q(0, 0), &q(3, 1), &q(6, 2)));
        let l = Line::through(&q(6, -6), &q(3, 6)).unwrap();
        assert_eq!(l, Line::through(&p(6, -6), &p(3, 6)).unwrap());
    }

    #[test]
    fn parallel_and_meets() {
        let a = Line::through(&p(0, 0), &p(1, 0)).unwrap();
        let b = Line::through(&p(0, 1), &p(1, 1)).unwrap();
        let c = Line::through(&p(0, 0), &p(0, 1)).unwrap();
        assert!(a.is_parallel_to(&b) && !a.meets(&b));
        assert!(a.meets(&c) && a.meets(&a));
    }

    fn small_point() -> impl Strategy<Value = Point> {
        (-6i64..=6, 1i64..=3, -6i64..=6, 1i64..=3).prop_map(|(a, b, c, d)| {
            Point::new(BigRational::from_ratio(a, b), BigRational::from_ratio(c, d))
        })
    }

    proptest! {
        #[test]
        fn determinant_routes_agree(a in small_point(), b in small_point(), c in small_point()) {
            prop_assert_eq!(are_collinear(&a, &b, &c), homogeneous_det(&a, &b, &c).is_zero());
        }

        #[test]
        fn line_contains_both_and_is_symmetric(a in small_point(), b in small_point()) {
            prop_assume!(a != b);
            let l = Line::through(&a, &b).unwrap();
            prop_assert!(l.contains(&a) && l.contains(&b));
            prop_assert!(l.is_canonical());
            prop_assert_eq!(l, Line::through(&b, &a).unwrap());
        }

        #[test]
        fn collinearity_is_affine_invariant(
            a in small_point(), b in small_point(), c in small_point(),
            m in proptest::array::uniform4(-3i64..=3), t in proptest::array::uniform2(-5i64..=5),
        ) {
            let s = BigRational::from_int;
            let map = AffineMap::new([[s(m[0]), s(m[1])], [s(m[2]), s(m[3])]], [s(t[0]), s(t[1])]);
            prop_assume!(map.is_some());
            let map = map.unwrap();
            prop_assert_eq!(
                are_collinear(&a, &b, &c),
                are_collinear(&map.apply(&a), &map.apply(&b), &map.apply(&c))
            );
        }
    }
}
