//! Multivariate polynomials over a [`Field`], Gröbner bases for ideals and
//! submodules of free modules, graded quotient rings and pfaffians.

mod groebner;
mod module;
mod parse;
mod pfaffian;
mod quotient;

pub use groebner::{buchberger, normal_form, GroebnerBasis, ModuleGb};
pub use module::{GradedModuleError, Presentation, Subquotient};
pub use parse::ParseError;
pub use pfaffian::{determinant, pfaffian, pfaffian_ideal, random_alternating_linear, PfaffianError};
pub use quotient::{quotient_basis, Colon, GradedQuotientRing, QuotientError};

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::Field;

/// Exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial(exps)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials of total degree `d` in `n` variables, in lex-descending order.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if i + 1 == n {
                cur[i] = left as u16;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(n, i + 1, left - e, cur, out);
            }
        }
        if n == 0 {
            return if d == 0 { vec![Monomial(vec![])] } else { vec![] };
        }
        let mut out = Vec::new();
        rec(n, 0, d, &mut vec![0; n], &mut out);
        out
    }
}

/// Term orders on monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// A polynomial as a list of terms sorted strictly descending in the ring's
/// order, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E: Clone> Poly<E> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<&(Monomial, E)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Largest total degree of a term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The polynomial ring `K[x_1, …, x_n]` with a fixed term order.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<K: Field> {
    field: K,
    names: Vec<String>,
    order: MonomialOrder,
}

pub type PolyOf<K> = Poly<<K as Field>::Elem>;
/// An element of a free module `P^r`, one polynomial per component.
pub type Vector<K> = Vec<PolyOf<K>>;

impl<K: Field> PolyRing<K> {
    pub fn new(field: K, names: &[&str], order: MonomialOrder) -> Self {
        PolyRing { field, names: names.iter().map(|s| s.to_string()).collect(), order }
    }

    pub fn with_names(field: K, names: Vec<String>, order: MonomialOrder) -> Self {
        PolyRing { field, names, order }
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn nvars(&self) -> usize {
        self.names.len()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        PolyRing { field: self.field.clone(), names: self.names.clone(), order }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn zero(&self) -> PolyOf<K> {
        Poly::zero()
    }

    pub fn one(&self) -> PolyOf<K> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: K::Elem) -> PolyOf<K> {
        if self.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly { terms: vec![(Monomial::one(self.nvars()), c)] }
        }
    }

    pub fn var(&self, i: usize) -> PolyOf<K> {
        Poly { terms: vec![(Monomial::var(self.nvars(), i), self.field.one())] }
    }

    pub fn monomial(&self, m: Monomial, c: K::Elem) -> PolyOf<K> {
        if self.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
    pub fn from_terms(&self, mut terms: Vec<(Monomial, K::Elem)>) -> PolyOf<K> {
        let k = &self.field;
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, K::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = k.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !k.is_zero(c));
        Poly { terms: out }
    }

    fn merge(&self, a: &PolyOf<K>, b: &PolyOf<K>, negate_b: bool) -> PolyOf<K> {
        let k = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            let (ma, ca) = &a.terms[i];
            let (mb, cb) = &b.terms[j];
            match self.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), if negate_b { k.neg(cb) } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b { k.sub(ca, cb) } else { k.add(ca, cb) };
                    if !k.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        out.extend(
            b.terms[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if negate_b { k.neg(c) } else { c.clone() })),
        );
        Poly { terms: out }
    }

    pub fn add(&self, a: &PolyOf<K>, b: &PolyOf<K>) -> PolyOf<K> {
        self.merge(a, b, false)
    }

    pub fn sub(&self, a: &PolyOf<K>, b: &PolyOf<K>) -> PolyOf<K> {
        self.merge(a, b, true)
    }

    pub fn neg(&self, a: &PolyOf<K>) -> PolyOf<K> {
        Poly { terms: a.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect() }
    }

    pub fn scale(&self, a: &PolyOf<K>, c: &K::Elem) -> PolyOf<K> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: a.terms.iter().map(|(m, x)| (m.clone(), self.field.mul(x, c))).collect() }
    }

    /// `c · m · a`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, a: &PolyOf<K>, m: &Monomial, c: &K::Elem) -> PolyOf<K> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly {
            terms: a.terms.iter().map(|(t, x)| (t.mul(m), self.field.mul(x, c))).collect(),
        }
    }

    pub fn mul(&self, a: &PolyOf<K>, b: &PolyOf<K>) -> PolyOf<K> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let k = &self.field;
        let mut terms = Vec::with_capacity(a.terms.len() * b.terms.len());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                terms.push((ma.mul(mb), k.mul(ca, cb)));
            }
        }
        self.from_terms(terms)
    }

    pub fn pow(&self, a: &PolyOf<K>, e: u32) -> PolyOf<K> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self, a: &PolyOf<K>) -> PolyOf<K> {
        match a.leading() {
            None => Poly::zero(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(a, &inv)
            }
        }
    }

    /// The constant coefficient.
    pub fn constant_term(&self, a: &PolyOf<K>) -> K::Elem {
        a.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Renders in the input syntax, e.g. `x^2*y - 3*z`.
    pub fn render(&self, a: &PolyOf<K>) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let k = &self.field;
        let mut s = String::new();
        for (idx, (m, c)) in a.terms.iter().enumerate() {
            let (neg, mag) = match k.to_i64(c) {
                Some(v) if v < 0 => (true, k.render(&k.neg(c))),
                _ => (false, k.render(c)),
            };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.render_monomial(m);
            if m.is_one() {
                s.push_str(&mag);
            } else if mag == "1" {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{mag}*{mono}"));
            }
        }
        s
    }

    /// Renders a module element as `[f1, f2, …]`.
    pub fn render_vector(&self, v: &[PolyOf<K>]) -> String {
        let parts: Vec<String> = v.iter().map(|p| self.render(p)).collect();
        format!("[{}]", parts.join(", "))
    }

    pub fn vector_is_zero(v: &[PolyOf<K>]) -> bool {
        v.iter().all(|p| p.is_zero())
    }

    pub fn vector_sub(&self, a: &[PolyOf<K>], b: &[PolyOf<K>]) -> Vector<K> {
        a.iter().zip(b).map(|(x, y)| self.sub(x, y)).collect()
    }

    pub fn vector_add(&self, a: &[PolyOf<K>], b: &[PolyOf<K>]) -> Vector<K> {
        a.iter().zip(b).map(|(x, y)| self.add(x, y)).collect()
    }

    pub fn vector_scale(&self, a: &[PolyOf<K>], f: &PolyOf<K>) -> Vector<K> {
        a.iter().map(|x| self.mul(x, f)).collect()
    }

    pub fn unit_vector(&self, rank: usize, i: usize) -> Vector<K> {
        (0..rank).map(|j| if j == i { self.one() } else { self.zero() }).collect()
    }

    /// Degree of a homogeneous vector in a free module with the given
    /// component shifts; `None` for the zero vector.
    pub fn vector_degree(v: &[PolyOf<K>], shifts: &[i32]) -> Option<i32> {
        v.iter()
            .zip(shifts)
            .find(|(p, _)| !p.is_zero())
            .map(|(p, s)| p.degree().unwrap() as i32 + s)
    }

    pub fn vector_is_homogeneous(v: &[PolyOf<K>], shifts: &[i32]) -> bool {
        let Some(d) = Self::vector_degree(v, shifts) else {
            return true;
        };
        v.iter().zip(shifts).all(|(p, s)| {
            p.terms.iter().all(|(m, _)| m.degree() as i32 + s == d)
        })
    }
}

impl<K: Field> fmt::Display for PolyRing<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ch = self.field.characteristic();
        let base = if ch == 0 { "QQ".to_string() } else { format!("F_{ch}") };
        write!(f, "{}[{}]", base, self.names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring() -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(101).unwrap(), &["x", "y", "z"], MonomialOrder::GrevLex)
    }

    #[test]
    fn grevlex_orders_ties_by_last_variable() {
        let r = ring();
        let y2 = Monomial::from_exponents(vec![0, 2, 0]);
        let xz = Monomial::from_exponents(vec![1, 0, 1]);
        assert_eq!(r.cmp(&y2, &xz), Ordering::Greater);
        let x = Monomial::var(3, 0);
        assert_eq!(r.cmp(&x, &y2), Ordering::Less);
        let lex = MonomialOrder::Lex;
        assert_eq!(lex.cmp(&x, &y2), Ordering::Greater);
    }

    #[test]
    fn arithmetic_and_rendering() {
        let r = ring();
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let f = r.add(&r.mul(&y, &y), &r.mul(&x, &z));
        assert_eq!(r.render(&f), "y^2 + x*z");
        let g = r.mul(&f, &r.sub(&x, &y));
        assert_eq!(r.sub(&g, &g), r.zero());
        assert_eq!(r.render(&r.neg(&x)), "-x");
        assert!(g.is_homogeneous());
        assert_eq!(g.degree(), Some(3));
        let c = r.constant(r.field().from_i64(-3));
        assert_eq!(r.render(&r.add(&c, &x)), "x - 3");
    }

    #[test]
    fn monomials_of_degree() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(2, 0).len(), 1);
    }
}
