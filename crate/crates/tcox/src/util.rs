//! Small exact-arithmetic helpers shared across the crate.

use crate::{Error, Int, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[cfg(test)]
pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

#[cfg(test)]
pub fn rvec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x)).collect()
}

#[cfg(test)]
pub fn ivec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn dot_q(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_iq(a: &[Int], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| Rat::from_integer(x.clone()) * y).sum()
}

pub fn dot_i(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_q(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Clear denominators of a rational vector: the unique primitive integer
/// vector pointing in the same direction. Errors on the zero vector.
pub fn primitive_dir(v: &[Rat]) -> Result<Vec<Int>> {
    if is_zero_q(v) {
        return Err(Error::ZeroVector);
    }
    let lcm = v.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    Ok(ints.iter().map(|x| x / &g).collect())
}

pub fn to_rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Scale the rows of a rational matrix to integers (row-wise lcm of
/// denominators); row scaling leaves the kernel unchanged.
pub fn clear_rows(rows: &[Vec<Rat>]) -> Vec<Vec<Int>> {
    rows.iter()
        .map(|row| {
            let lcm = row.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect()
}

/// Parse an exact rational literal such as `-3/2`, `7` or `1/2`. Accepts an
/// ASCII hyphen or a U+2212 minus sign.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let cleaned = s.trim().replace('\u{2212}', "-");
    let err = || Error::schema("rational", format!("cannot parse `{s}` as an exact rational"));
    let mut parts = cleaned.splitn(2, '/');
    let numer: Int = parts.next().ok_or_else(err)?.trim().parse().map_err(|_| err())?;
    match parts.next() {
        None => Ok(Rat::from_integer(numer)),
        Some(d) => {
            let denom: Int = d.trim().parse().map_err(|_| err())?;
            if denom.is_zero() {
                return Err(err());
            }
            Ok(Rat::new(numer, denom))
        }
    }
}

pub fn fmt_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn fmt_qvec(v: &[Rat]) -> String {
    let inner: Vec<String> = v.iter().map(fmt_rat).collect();
    format!("({})", inner.join(", "))
}

pub fn fmt_ivec(v: &[Int]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(", "))
}

/// Rank over the rationals of a set of rational row vectors.
pub fn rank_q(rows: &[Vec<Rat>]) -> usize {
    let mut mat: Vec<Vec<Rat>> = rows.to_vec();
    let mut rank = 0;
    if mat.is_empty() {
        return 0;
    }
    let cols = mat[0].len();
    for c in 0..cols {
        let Some(p) = (rank..mat.len()).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(rank, p);
        let pivot = mat[rank][c].clone();
        for i in 0..mat.len() {
            if i != rank && !mat[i][c].is_zero() {
                let f = &mat[i][c] / &pivot;
                for j in c..cols {
                    let sub = &f * &mat[rank][j];
                    mat[i][j] = &mat[i][j] - sub;
                }
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

/// Reduced row echelon form over the rationals; zero rows dropped. The
/// result is a canonical basis of the row space, so two row sets span the
/// same subspace iff their reduced forms are equal.
pub fn rref(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut mat: Vec<Vec<Rat>> = rows.to_vec();
    if mat.is_empty() {
        return mat;
    }
    let cols = mat[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..mat.len()).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(rank, p);
        let pivot = mat[rank][c].clone();
        for x in mat[rank][c..].iter_mut() {
            *x = &*x / &pivot;
        }
        for i in 0..mat.len() {
            if i != rank && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in c..cols {
                    let sub = &f * &mat[rank][j];
                    mat[i][j] = &mat[i][j] - sub;
                }
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    mat.truncate(rank);
    mat.retain(|r| !is_zero_q(r));
    mat
}

/// Signed absolute-value comparison helper used to pick small pivots.
pub fn abs_cmp(a: &Int, b: &Int) -> std::cmp::Ordering {
    a.abs().cmp(&b.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_including_unicode_minus() {
        assert_eq!(parse_rat("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rat("\u{2212}3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rat("7").unwrap(), rat(7));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn primitive_direction() {
        assert_eq!(primitive_dir(&rvec(&[2, 4])).unwrap(), ivec(&[1, 2]));
        assert_eq!(primitive_dir(&[ratio(-3, 2), rat(0)]).unwrap(), ivec(&[-1, 0]));
        assert!(primitive_dir(&rvec(&[0, 0])).is_err());
    }

    #[test]
    fn rref_is_canonical() {
        let a = vec![rvec(&[1, 1, -1]), rvec(&[2, 2, -2])];
        let b = vec![rvec(&[-3, -3, 3])];
        assert_eq!(rref(&a), rref(&b));
    }
}
