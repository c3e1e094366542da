//! Exact row reduction over a [`Scalar`] field.

use crate::scalar::Scalar;

pub type Vector<T> = Vec<T>;

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn sub<T: Scalar>(a: &[T], b: &[T]) -> Vector<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn add<T: Scalar>(a: &[T], b: &[T]) -> Vector<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn scale<T: Scalar>(a: &[T], s: &T) -> Vector<T> {
    a.iter().map(|x| x.clone() * s.clone()).collect()
}

pub fn is_zero<T: Scalar>(a: &[T]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Reduced row-echelon form with zero rows dropped, and the pivot column of each row.
pub fn rref<T: Scalar>(rows: &[Vector<T>]) -> (Vec<Vector<T>>, Vec<usize>) {
    let mut m: Vec<Vector<T>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        m[r] = scale(&m[r], &inv);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let row = scale(&m[r], &f);
                m[i] = sub(&m[i], &row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank<T: Scalar>(rows: &[Vector<T>]) -> usize {
    rref(rows).0.len()
}

/// A basis of `{x : rows · x = 0}` in `ncols` unknowns.
pub fn nullspace<T: Scalar>(rows: &[Vector<T>], ncols: usize) -> Vec<Vector<T>> {
    let (r, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); ncols];
            v[f] = T::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Whether `v` lies in the row span of `rows`.
pub fn in_span<T: Scalar>(rows: &[Vector<T>], v: &[T]) -> bool {
    if is_zero(v) {
        return true;
    }
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    rank(&ext) == rank(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;

    fn v(xs: &[i64]) -> Vector<Rational> {
        xs.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])];
        assert_eq!(rank(&rows), 2);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            assert!(dot(r, &ns[0]).is_zero());
        }
        assert!(in_span(&rows, &v(&[1, 3, 4])));
        assert!(!in_span(&rows, &v(&[0, 0, 1])));
    }

    #[test]
    fn rref_is_canonical() {
        let a = rref(&[v(&[2, 4, 0]), v(&[0, 0, 3])]).0;
        let b = rref(&[v(&[1, 2, 3]), v(&[1, 2, -3])]).0;
        assert_eq!(a, b);
    }
}
