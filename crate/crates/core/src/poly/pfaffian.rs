//! Pfaffians of alternating polynomial matrices.
//!
//! Sign convention: `pf` expands along the first row,
//! `pf(M) = Σ_{j≥1} (−1)^{j+1} m_{0j} pf(M without rows/cols 0, j)` (0-indexed),
//! and the `i`-th sub-maximal pfaffian of an odd matrix is
//! `(−1)^i pf(M without row/col i)`.

use super::{PolyOf, PolyRing};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PfaffianError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not alternating (entry ({0},{1}))")]
    NotAlternating(usize, usize),
    #[error("pfaffian ideals need an odd-size matrix, got size {0}")]
    EvenSize(usize),
    #[error("pfaffians are defined for even-size matrices, got size {0}")]
    OddSize(usize),
}

fn check_alternating<K: Field>(ring: &PolyRing<K>, m: &[Vec<PolyOf<K>>]) -> Result<(), PfaffianError> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(PfaffianError::NotSquare);
    }
    for i in 0..n {
        if !m[i][i].is_zero() {
            return Err(PfaffianError::NotAlternating(i, i));
        }
        for j in i + 1..n {
            if !ring.add(&m[i][j], &m[j][i]).is_zero() {
                return Err(PfaffianError::NotAlternating(i, j));
            }
        }
    }
    Ok(())
}

fn pf_rec<K: Field>(ring: &PolyRing<K>, m: &[Vec<PolyOf<K>>], idx: &[usize]) -> PolyOf<K> {
    if idx.is_empty() {
        return ring.one();
    }
    let first = idx[0];
    let mut acc = ring.zero();
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let entry = &m[first][j];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx.iter().copied().filter(|&t| t != first && t != j).collect();
        let term = ring.mul(entry, &pf_rec(ring, m, &rest));
        acc = if pos % 2 == 1 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    acc
}

/// Pfaffian of an even-size alternating matrix.
pub fn pfaffian<K: Field>(ring: &PolyRing<K>, m: &[Vec<PolyOf<K>>]) -> Result<PolyOf<K>, PfaffianError> {
    check_alternating(ring, m)?;
    if m.len() % 2 == 1 {
        return Err(PfaffianError::OddSize(m.len()));
    }
    let idx: Vec<usize> = (0..m.len()).collect();
    Ok(pf_rec(ring, m, &idx))
}

/// The `n` sub-maximal pfaffians of an odd-size alternating matrix.
pub fn pfaffian_ideal<K: Field>(
    ring: &PolyRing<K>,
    m: &[Vec<PolyOf<K>>],
) -> Result<Vec<PolyOf<K>>, PfaffianError> {
    check_alternating(ring, m)?;
    let n = m.len();
    if n.is_multiple_of(2) {
        return Err(PfaffianError::EvenSize(n));
    }
    Ok((0..n)
        .map(|i| {
            let idx: Vec<usize> = (0..n).filter(|&t| t != i).collect();
            let p = pf_rec(ring, m, &idx);
            if i % 2 == 0 {
                p
            } else {
                ring.neg(&p)
            }
        })
        .collect())
}

/// An `n × n` alternating matrix of random linear forms.
pub fn random_alternating_linear<K: Field, R: rand::Rng + ?Sized>(ring: &PolyRing<K>, n: usize, rng: &mut R) -> Vec<Vec<PolyOf<K>>> {
    let k = ring.field();
    let mut m = vec![vec![ring.zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let f = (0..ring.nvars()).fold(ring.zero(), |acc, v| ring.add(&acc, &ring.scale(&ring.var(v), &k.random(rng))));
            m[j][i] = ring.neg(&f);
            m[i][j] = f;
        }
    }
    m
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant<K: Field>(ring: &PolyRing<K>, m: &[Vec<PolyOf<K>>]) -> PolyOf<K> {
    fn rec<K: Field>(ring: &PolyRing<K>, m: &[Vec<PolyOf<K>>], rows: &[usize], cols: &[usize]) -> PolyOf<K> {
        if rows.is_empty() {
            return ring.one();
        }
        let r = rows[0];
        let mut acc = ring.zero();
        for (pos, &c) in cols.iter().enumerate() {
            if m[r][c].is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&t| t != c).collect();
            let term = ring.mul(&m[r][c], &rec(ring, m, &rows[1..], &sub_cols));
            acc = if pos % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
        }
        acc
    }
    let idx: Vec<usize> = (0..m.len()).collect();
    rec(ring, m, &idx, &idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::MonomialOrder;

    fn ring() -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(101).unwrap(), &["a", "b", "c", "d", "e", "f"], MonomialOrder::GrevLex)
    }

    fn alternating(r: &PolyRing<PrimeField>, upper: &[&str], n: usize) -> Vec<Vec<PolyOf<PrimeField>>> {
        let mut m = vec![vec![r.zero(); n]; n];
        let mut it = upper.iter();
        for i in 0..n {
            for j in i + 1..n {
                let p = r.parse(it.next().unwrap()).unwrap();
                m[j][i] = r.neg(&p);
                m[i][j] = p;
            }
        }
        m
    }

    #[test]
    fn three_by_three_pfaffians() {
        let r = ring();
        let m = alternating(&r, &["a", "b", "c"], 3);
        let gens = pfaffian_ideal(&r, &m).unwrap();
        assert_eq!(gens, vec![r.var(2), r.neg(&r.var(1)), r.var(0)]);
    }

    #[test]
    fn zero_matrix_gives_zero_pfaffians() {
        let r = ring();
        let m = vec![vec![r.zero(); 5]; 5];
        assert!(pfaffian_ideal(&r, &m).unwrap().iter().all(|p| p.is_zero()));
    }

    #[test]
    fn square_of_pfaffian_is_determinant() {
        let r = ring();
        let m = alternating(&r, &["a", "b", "c", "d", "e", "f"], 4);
        let pf = pfaffian(&r, &m).unwrap();
        assert_eq!(r.render(&pf), "c*d - b*e + a*f");
        assert_eq!(r.mul(&pf, &pf), determinant(&r, &m));
    }

    #[test]
    fn rejects_bad_input() {
        let r = ring();
        let mut m = vec![vec![r.zero(); 3]; 3];
        m[0][1] = r.var(0);
        assert_eq!(pfaffian_ideal(&r, &m), Err(PfaffianError::NotAlternating(0, 1)));
        let z = vec![vec![r.zero(); 2]; 2];
        assert_eq!(pfaffian_ideal(&r, &z), Err(PfaffianError::EvenSize(2)));
    }
}
