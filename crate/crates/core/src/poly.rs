//! Integer polynomials: univariate with coefficient lists, and the bivariate
//! Tutte polynomial as a sparse coefficient matrix.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Univariate polynomial with nonnegative integer coefficients, ascending by
/// degree, no trailing zeros. The zero polynomial has an empty list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IntPolynomial {
    coefficients: Vec<u64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial {
            coefficients: Vec::new(),
        }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coefficients: vec![1],
        }
    }

    pub fn from_coefficients(mut coefficients: Vec<u64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        IntPolynomial { coefficients }
    }

    /// Builds the polynomial whose k-th coefficient counts how many of the
    /// given exponents equal k.
    pub fn from_exponents(exponents: impl IntoIterator<Item = usize>) -> Self {
        let mut coefficients = Vec::new();
        for k in exponents {
            if coefficients.len() <= k {
                coefficients.resize(k + 1, 0);
            }
            coefficients[k] += 1;
        }
        IntPolynomial::from_coefficients(coefficients)
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> u64 {
        self.coefficients.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Value at 1: the sum of all coefficients.
    pub fn eval_one(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    /// Coefficient list reversed within the given degree, i.e. the polynomial
    /// `x^degree * p(1/x)` when `deg p <= degree`. Returns `None` if the
    /// polynomial does not fit in the given degree.
    pub fn reversed_within(&self, degree: usize) -> Option<IntPolynomial> {
        if self.coefficients.len() > degree + 1 {
            return None;
        }
        let mut rev = vec![0u64; degree + 1];
        for (k, &c) in self.coefficients.iter().enumerate() {
            rev[degree - k] = c;
        }
        Some(IntPolynomial::from_coefficients(rev))
    }

    /// Renders with the given variable name, e.g. `1 + 2y` or `1 + x + x^2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut terms = Vec::new();
        for (k, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => var.to_owned(),
                (1, c) => format!("{c}{var}"),
                (k, 1) => format!("{var}^{k}"),
                (k, c) => format!("{c}{var}^{k}"),
            };
            terms.push(term);
        }
        terms.join(" + ")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

/// Bivariate Tutte polynomial as a sparse map `(i, j) -> t_ij` with all
/// coefficients nonnegative and no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TuttePolynomial {
    coeffs: BTreeMap<(u32, u32), u64>,
}

impl TuttePolynomial {
    pub fn zero() -> Self {
        TuttePolynomial::default()
    }

    pub fn one() -> Self {
        let mut p = TuttePolynomial::default();
        p.add_term(0, 0, 1);
        p
    }

    pub fn monomial(i: u32, j: u32) -> Self {
        let mut p = TuttePolynomial::default();
        p.add_term(i, j, 1);
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, count: u64) {
        if count == 0 {
            return;
        }
        *self.coeffs.entry((i, j)).or_insert(0) += count;
    }

    pub fn add_assign(&mut self, other: &TuttePolynomial) {
        for (&(i, j), &c) in &other.coeffs {
            self.add_term(i, j, c);
        }
    }

    /// Multiplies by the monomial `x^i y^j`.
    pub fn shifted(&self, i: u32, j: u32) -> TuttePolynomial {
        TuttePolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(a, b), &c)| ((a + i, b + j), c))
                .collect(),
        }
    }

    pub fn coefficient(&self, i: u32, j: u32) -> u64 {
        self.coeffs.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.coeffs.iter().map(|(&k, &v)| (k, v))
    }

    /// Value at (1, 1): for a connected graph, the spanning tree count.
    pub fn eval_ones(&self) -> u64 {
        self.coeffs.values().sum()
    }

    /// The univariate polynomial `T(x, 1)`.
    pub fn x_specialization(&self) -> IntPolynomial {
        let mut coefficients = Vec::new();
        for (&(i, _), &c) in &self.coeffs {
            let i = i as usize;
            if coefficients.len() <= i {
                coefficients.resize(i + 1, 0);
            }
            coefficients[i] += c;
        }
        IntPolynomial::from_coefficients(coefficients)
    }

    /// The univariate polynomial `T(1, y)`.
    pub fn y_specialization(&self) -> IntPolynomial {
        let mut coefficients = Vec::new();
        for (&(_, j), &c) in &self.coeffs {
            let j = j as usize;
            if coefficients.len() <= j {
                coefficients.resize(j + 1, 0);
            }
            coefficients[j] += c;
        }
        IntPolynomial::from_coefficients(coefficients)
    }

    pub fn to_document(&self) -> TutteDocument {
        TutteDocument {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(i, j), &c)| (i, j, c))
                .collect(),
        }
    }

    pub fn from_document(doc: &TutteDocument) -> Self {
        let mut p = TuttePolynomial::default();
        for &(i, j, c) in &doc.coeffs {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_owned();
        }
        let mut terms = Vec::new();
        for (&(i, j), &c) in &self.coeffs {
            let mut s = String::new();
            if c != 1 || (i == 0 && j == 0) {
                s.push_str(&c.to_string());
            }
            match i {
                0 => {}
                1 => s.push('x'),
                _ => s.push_str(&format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => s.push('y'),
                _ => s.push_str(&format!("y^{j}")),
            }
            terms.push(s);
        }
        terms.join(" + ")
    }
}

/// Serialized Tutte polynomial: `{"coeffs": [[i, j, t_ij], ...]}` sorted by
/// `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TutteDocument {
    pub coeffs: Vec<(u32, u32, u64)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strips_trailing_zeros() {
        let p = IntPolynomial::from_coefficients(vec![1, 2, 0, 0]);
        assert_eq!(p.coefficients(), &[1, 2]);
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn counts_exponents() {
        let p = IntPolynomial::from_exponents(vec![0, 1, 1, 2]);
        assert_eq!(p.coefficients(), &[1, 2, 1]);
        assert_eq!(p.eval_one(), 4);
    }

    #[test]
    fn reversal_within_degree() {
        let p = IntPolynomial::from_coefficients(vec![1, 1, 1]);
        let r = p.reversed_within(2).unwrap();
        assert_eq!(r, p);
        let q = IntPolynomial::from_coefficients(vec![2, 1]);
        assert_eq!(
            q.reversed_within(1).unwrap().coefficients(),
            &[1, 2]
        );
        assert!(q.reversed_within(0).is_none());
    }

    #[test]
    fn renders_terms() {
        assert_eq!(IntPolynomial::from_coefficients(vec![1, 2]).render("y"), "1 + 2y");
        assert_eq!(
            IntPolynomial::from_coefficients(vec![1, 1, 1]).render("x"),
            "1 + x + x^2"
        );
        assert_eq!(IntPolynomial::zero().render("x"), "0");
    }

    #[test]
    fn tutte_specializations() {
        // x^2 + x + y
        let mut t = TuttePolynomial::zero();
        t.add_term(2, 0, 1);
        t.add_term(1, 0, 1);
        t.add_term(0, 1, 1);
        assert_eq!(t.x_specialization().coefficients(), &[1, 1, 1]);
        assert_eq!(t.y_specialization().coefficients(), &[2, 1]);
        assert_eq!(t.eval_ones(), 3);
        assert_eq!(t.render(), "y + x + x^2");
    }

    #[test]
    fn tutte_document_round_trip() {
        let mut t = TuttePolynomial::zero();
        t.add_term(1, 0, 2);
        t.add_term(0, 3, 1);
        let doc = t.to_document();
        assert_eq!(doc.coeffs, vec![(0, 3, 1), (1, 0, 2)]);
        assert_eq!(TuttePolynomial::from_document(&doc), t);
    }
}
