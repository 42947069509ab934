use crate::ring::{CommRing, RMatrix};

/// A bounded complex of finite free modules, homologically graded.
///
/// Sign conventions used throughout:
/// * shift: `(Σ^n C)_i = C_{i-n}` with differential `(-1)^n d`;
/// * cone of `f: C → D`: `cone_i = D_i ⊕ C_{i-1}`, `d(y, x) = (d y + f x, -d x)`;
/// * tensor: `d(c ⊗ e) = dc ⊗ e + (-1)^{|c|} c ⊗ de`;
/// * Hom: `d(f) = d ∘ f - (-1)^{|f|} f ∘ d`.
#[derive(Clone, Debug)]
pub struct FreeComplex<R: CommRing> {
    ring: R,
    lo: i32,
    /// Internal degrees of the basis in each homological degree `lo + k`.
    degrees: Vec<Vec<i32>>,
    /// `diffs[k]: C_{lo+k} → C_{lo+k-1}`; `diffs[0]` has zero rows.
    diffs: Vec<RMatrix<R::Elem>>,
}

/// A degree-zero chain map between free complexes.
#[derive(Clone, Debug)]
pub struct ChainMap<R: CommRing> {
    pub source: FreeComplex<R>,
    pub target: FreeComplex<R>,
    /// `(i, f_i: C_i → D_i)`; missing degrees are zero.
    pub maps: Vec<(i32, RMatrix<R::Elem>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("differential in degree {0} has the wrong shape")]
    Shape(i32),
}

impl<R: CommRing> FreeComplex<R> {
    /// `diffs[k]` maps degree `lo + k` to `lo + k - 1`; its column count gives
    /// the rank in degree `lo + k`.
    pub fn new(
        ring: &R,
        lo: i32,
        ranks: &[usize],
        degrees: Option<Vec<Vec<i32>>>,
        diffs: Vec<RMatrix<R::Elem>>,
    ) -> Result<Self, ComplexError> {
        let degrees = degrees.unwrap_or_else(|| ranks.iter().map(|&r| vec![0; r]).collect());
        if diffs.len() != ranks.len() || degrees.len() != ranks.len() {
            return Err(ComplexError::Shape(lo));
        }
        for (k, d) in diffs.iter().enumerate() {
            let below = if k == 0 { 0 } else { ranks[k - 1] };
            if d.cols() != ranks[k] || d.rows() != below || degrees[k].len() != ranks[k] {
                return Err(ComplexError::Shape(lo + k as i32));
            }
        }
        Ok(FreeComplex { ring: ring.clone(), lo, degrees, diffs })
    }

    pub fn zero(ring: &R) -> Self {
        FreeComplex { ring: ring.clone(), lo: 0, degrees: vec![], diffs: vec![] }
    }

    /// `R^rank` in homological degree `deg`.
    pub fn concentrated(ring: &R, deg: i32, rank: usize) -> Self {
        FreeComplex {
            ring: ring.clone(),
            lo: deg,
            degrees: vec![vec![0; rank]],
            diffs: vec![RMatrix::zeros(ring, 0, rank)],
        }
    }

    /// `R --(x)--> R` in degrees 1 and 0.
    pub fn multiplication(ring: &R, x: &R::Elem) -> Self {
        let deg = ring.degree(x).unwrap_or(0);
        FreeComplex {
            ring: ring.clone(),
            lo: 0,
            degrees: vec![vec![0], vec![deg]],
            diffs: vec![RMatrix::zeros(ring, 0, 1), RMatrix::row_vector(vec![x.clone()])],
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }
    pub fn is_empty(&self) -> bool {
        self.diffs.is_empty()
    }
    pub fn lo(&self) -> i32 {
        self.lo
    }
    /// Highest degree with a (possibly zero-rank) term.
    pub fn hi(&self) -> i32 {
        self.lo + self.diffs.len() as i32 - 1
    }

    fn idx(&self, i: i32) -> Option<usize> {
        if i < self.lo || i > self.hi() {
            None
        } else {
            Some((i - self.lo) as usize)
        }
    }

    pub fn rank(&self, i: i32) -> usize {
        self.idx(i).map_or(0, |k| self.diffs[k].cols())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.diffs.iter().map(|d| d.cols()).collect()
    }

    pub fn degrees(&self, i: i32) -> Vec<i32> {
        self.idx(i).map_or_else(Vec::new, |k| self.degrees[k].clone())
    }

    /// `d_i: C_i → C_{i-1}`, zero outside the stored range.
    pub fn differential(&self, i: i32) -> RMatrix<R::Elem> {
        match self.idx(i) {
            Some(k) if k > 0 => self.diffs[k].clone(),
            _ => RMatrix::zeros(&self.ring, self.rank(i - 1), self.rank(i)),
        }
    }

    /// Whether `d_{i-1} ∘ d_i = 0` for every `i`.
    pub fn check_d_squared(&self) -> bool {
        (self.lo + 1..=self.hi()).all(|i| {
            self.differential(i - 1).mul(&self.ring, &self.differential(i)).is_zero(&self.ring)
        })
    }

    /// `Σ^n C`.
    pub fn shift(&self, n: i32) -> Self {
        let neg = n.rem_euclid(2) == 1;
        FreeComplex {
            ring: self.ring.clone(),
            lo: self.lo + n,
            degrees: self.degrees.clone(),
            diffs: self
                .diffs
                .iter()
                .enumerate()
                .map(|(k, d)| if k == 0 { d.clone() } else { d.signed(&self.ring, neg) })
                .collect(),
        }
    }

    /// Builds a complex from per-degree ranks, degrees and differentials
    /// over an arbitrary range, trimming nothing.
    fn assemble(ring: &R, lo: i32, hi: i32, degrees: Vec<Vec<i32>>, diff: impl Fn(i32) -> RMatrix<R::Elem>) -> Self {
        if hi < lo {
            return Self::zero(ring);
        }
        let mut diffs = Vec::new();
        for i in lo..=hi {
            if i == lo {
                diffs.push(RMatrix::zeros(ring, 0, degrees[0].len()));
            } else {
                diffs.push(diff(i));
            }
        }
        FreeComplex { ring: ring.clone(), lo, degrees, diffs }
    }

    /// `C ⊗ D`, with basis of degree `n` ordered by `p` ascending, then
    /// `c_a ⊗ d_b` with `a` major.
    pub fn tensor(&self, other: &FreeComplex<R>) -> Self {
        let r = &self.ring;
        if self.is_empty() || other.is_empty() {
            return Self::zero(r);
        }
        let lo = self.lo + other.lo;
        let hi = self.hi() + other.hi();
        let blocks = |n: i32| -> Vec<(i32, usize)> {
            let mut out = Vec::new();
            let mut off = 0;
            for p in self.lo..=self.hi() {
                let q = n - p;
                if q < other.lo || q > other.hi() {
                    continue;
                }
                out.push((p, off));
                off += self.rank(p) * other.rank(q);
            }
            out
        };
        let rank_of = |n: i32| -> usize { blocks(n).iter().map(|&(p, _)| self.rank(p) * other.rank(n - p)).sum() };
        let degrees: Vec<Vec<i32>> = (lo..=hi)
            .map(|n| {
                let mut v = Vec::new();
                for (p, _) in blocks(n) {
                    let (dc, dd) = (self.degrees(p), other.degrees(n - p));
                    for a in &dc {
                        for b in &dd {
                            v.push(a + b);
                        }
                    }
                }
                v
            })
            .collect();
        let diff = |n: i32| -> RMatrix<R::Elem> {
            let mut m = RMatrix::zeros(r, rank_of(n - 1), rank_of(n));
            let src = blocks(n);
            let tgt = blocks(n - 1);
            let find = |p: i32| tgt.iter().find(|t| t.0 == p).map(|t| t.1);
            for (p, off) in src {
                let q = n - p;
                let (rc, rd) = (self.rank(p), other.rank(q));
                // dc ⊗ e lands in block (p-1, q).
                if let Some(toff) = find(p - 1) {
                    let dc = self.differential(p);
                    for a in 0..rc {
                        for b in 0..rd {
                            for a2 in 0..dc.rows() {
                                let v = dc.get(a2, a);
                                if !r.is_zero(v) {
                                    m.set(toff + a2 * rd + b, off + a * rd + b, v.clone());
                                }
                            }
                        }
                    }
                }
                // (-1)^p c ⊗ de lands in block (p, q-1).
                if let Some(toff) = find(p) {
                    let dd = other.differential(q);
                    let rd2 = other.rank(q - 1);
                    let neg = p.rem_euclid(2) == 1;
                    for a in 0..rc {
                        for b in 0..rd {
                            for b2 in 0..dd.rows() {
                                let v = dd.get(b2, b);
                                if !r.is_zero(v) {
                                    m.set(toff + a * rd2 + b2, off + a * rd + b, r.signed(v, neg));
                                }
                            }
                        }
                    }
                }
            }
            m
        };
        Self::assemble(r, lo, hi, degrees, diff)
    }

    /// `Hom(C, D)`: degree `n` is `⊕_p Hom(C_p, D_{p+n})`, ordered by `p`
    /// ascending, with the map `c_a ↦ d_b` at index `a·rank D_{p+n} + b`.
    pub fn hom(&self, other: &FreeComplex<R>) -> Self {
        let r = &self.ring;
        if self.is_empty() || other.is_empty() {
            return Self::zero(r);
        }
        let lo = other.lo - self.hi();
        let hi = other.hi() - self.lo;
        let blocks = |n: i32| -> Vec<(i32, usize)> {
            let mut out = Vec::new();
            let mut off = 0;
            for p in self.lo..=self.hi() {
                let q = p + n;
                if q < other.lo || q > other.hi() {
                    continue;
                }
                out.push((p, off));
                off += self.rank(p) * other.rank(q);
            }
            out
        };
        let rank_of = |n: i32| -> usize { blocks(n).iter().map(|&(p, _)| self.rank(p) * other.rank(p + n)).sum() };
        let degrees: Vec<Vec<i32>> = (lo..=hi)
            .map(|n| {
                let mut v = Vec::new();
                for (p, _) in blocks(n) {
                    let (dc, dd) = (self.degrees(p), other.degrees(p + n));
                    for a in &dc {
                        for b in &dd {
                            v.push(b - a);
                        }
                    }
                }
                v
            })
            .collect();
        let diff = |n: i32| -> RMatrix<R::Elem> {
            let mut m = RMatrix::zeros(r, rank_of(n - 1), rank_of(n));
            let src = blocks(n);
            let tgt = blocks(n - 1);
            let find = |p: i32| tgt.iter().find(|t| t.0 == p).map(|t| t.1);
            for (p, off) in src {
                let q = p + n;
                let (rc, rd) = (self.rank(p), other.rank(q));
                // d ∘ f: Hom(C_p, D_q) → Hom(C_p, D_{q-1}).
                if let Some(toff) = find(p) {
                    let dd = other.differential(q);
                    let rd2 = other.rank(q - 1);
                    for a in 0..rc {
                        for b in 0..rd {
                            for b2 in 0..dd.rows() {
                                let v = dd.get(b2, b);
                                if !r.is_zero(v) {
                                    m.set(toff + a * rd2 + b2, off + a * rd + b, v.clone());
                                }
                            }
                        }
                    }
                }
                // -(-1)^n f ∘ d: Hom(C_p, D_q) → Hom(C_{p+1}, D_q).
                if let Some(toff) = find(p + 1) {
                    let dc = self.differential(p + 1);
                    let neg = n.rem_euclid(2) == 0;
                    for a in 0..rc {
                        for b in 0..rd {
                            for a2 in 0..dc.cols() {
                                let v = dc.get(a, a2);
                                if !r.is_zero(v) {
                                    m.set(toff + a2 * rd + b, off + a * rd + b, r.signed(v, neg));
                                }
                            }
                        }
                    }
                }
            }
            m
        };
        Self::assemble(r, lo, hi, degrees, diff)
    }

    /// `Hom(C, R)` with `R` in degree 0.
    pub fn dual(&self) -> Self {
        self.hom(&Self::concentrated(&self.ring, 0, 1))
    }
}

impl<R: CommRing> ChainMap<R> {
    pub fn map(&self, i: i32) -> RMatrix<R::Elem> {
        let r = self.source.ring();
        self.maps
            .iter()
            .find(|(d, _)| *d == i)
            .map(|(_, m)| m.clone())
            .unwrap_or_else(|| RMatrix::zeros(r, self.target.rank(i), self.source.rank(i)))
    }

    /// Multiplication by `x` on every term.
    pub fn scalar(c: &FreeComplex<R>, x: &R::Elem) -> Self {
        let r = c.ring();
        let maps = (c.lo()..=c.hi())
            .map(|i| {
                let n = c.rank(i);
                let mut m = RMatrix::zeros(r, n, n);
                for t in 0..n {
                    m.set(t, t, x.clone());
                }
                (i, m)
            })
            .collect();
        ChainMap { source: c.clone(), target: c.clone(), maps }
    }

    /// Whether `d f = f d` in every degree.
    pub fn commutes(&self) -> bool {
        let r = self.source.ring();
        let lo = self.source.lo().min(self.target.lo());
        let hi = self.source.hi().max(self.target.hi());
        (lo..=hi + 1).all(|i| {
            let left = self.target.differential(i).mul(r, &self.map(i));
            let right = self.map(i - 1).mul(r, &self.source.differential(i));
            left.ring_eq(r, &right)
        })
    }

    /// The mapping cone; `cone_i = D_i ⊕ C_{i-1}`.
    pub fn cone(&self) -> FreeComplex<R> {
        let (c, d) = (&self.source, &self.target);
        let r = c.ring();
        if c.is_empty() && d.is_empty() {
            return FreeComplex::zero(r);
        }
        let lo = match (c.is_empty(), d.is_empty()) {
            (true, _) => d.lo(),
            (_, true) => c.lo() + 1,
            _ => d.lo().min(c.lo() + 1),
        };
        let hi = match (c.is_empty(), d.is_empty()) {
            (true, _) => d.hi(),
            (_, true) => c.hi() + 1,
            _ => d.hi().max(c.hi() + 1),
        };
        let degrees: Vec<Vec<i32>> = (lo..=hi)
            .map(|i| {
                let mut v = d.degrees(i);
                v.extend(c.degrees(i - 1));
                v
            })
            .collect();
        let diff = |i: i32| -> RMatrix<R::Elem> {
            let (dn, cn) = (d.rank(i), c.rank(i - 1));
            let (dn2, cn2) = (d.rank(i - 1), c.rank(i - 2));
            let mut m = RMatrix::zeros(r, dn2 + cn2, dn + cn);
            m.set_block(0, 0, &d.differential(i));
            m.set_block(0, dn, &self.map(i - 1));
            m.set_block(dn2, dn, &c.differential(i - 1).neg(r));
            m
        };
        FreeComplex::assemble(r, lo, hi, degrees, diff)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::{GradedQuotientRing, MonomialOrder, PolyRing};

    fn poly_ring() -> GradedQuotientRing<PrimeField> {
        GradedQuotientRing::polynomial_ring(PolyRing::new(
            PrimeField::new(101).unwrap(),
            &["x", "y", "z"],
            MonomialOrder::GrevLex,
        ))
    }

    #[test]
    fn tensor_and_hom_square_to_zero() {
        let a = poly_ring();
        let r = a.ring().clone();
        let kx = FreeComplex::multiplication(&a, &r.var(0));
        let ky = FreeComplex::multiplication(&a, &r.var(1));
        let kz = FreeComplex::multiplication(&a, &r.var(2));
        let t = kx.tensor(&ky).tensor(&kz);
        assert_eq!(t.ranks(), vec![1, 3, 3, 1]);
        assert!(t.check_d_squared());
        let h = t.hom(&t);
        assert!(h.check_d_squared());
        assert_eq!(h.lo(), -3);
        assert_eq!(h.rank(0), 1 + 9 + 9 + 1);
        let dual = t.dual();
        assert!(dual.check_d_squared());
        assert_eq!(dual.ranks(), vec![1, 3, 3, 1]);
        assert!(t.shift(3).check_d_squared());
    }

    #[test]
    fn cone_of_multiplication() {
        let a = poly_ring();
        let r = a.ring().clone();
        let kx = FreeComplex::multiplication(&a, &r.var(0));
        let f = ChainMap::scalar(&kx, &r.var(1));
        assert!(f.commutes());
        let c = f.cone();
        assert!(c.check_d_squared());
        assert_eq!(c.ranks(), vec![1, 2, 1]);
        let unit = FreeComplex::concentrated(&a, 0, 1);
        let c0 = ChainMap::scalar(&unit, &r.var(0)).cone();
        assert_eq!(c0.differential(1), kx.differential(1));
    }
}
