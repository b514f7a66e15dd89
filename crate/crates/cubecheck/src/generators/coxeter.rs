//! Rank-3 Coxeter groups realized by exact reflection matrices, and their
//! Cayley graphs.
//!
//! Group elements are 3x3 matrices with entries `a + b*sqrt(5)` over the
//! rationals. The reflection generators use Cartan-style integer pairings
//! for orders 2, 3, 4, 6 and the golden ratio for order 5, which keeps every
//! element exact; there is no floating point anywhere. Orders outside
//! 2..=6 would need a larger number field and are rejected up front.

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::Zero;

use crate::graph::Graph;
use crate::Error;

type Q = Ratio<i64>;

/// An element of the quadratic field Q(sqrt 5), kept in reduced form by the
/// rational representation itself.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QSqrt5 {
    a: Q,
    b: Q,
}

impl QSqrt5 {
    pub fn rational(n: i64, d: i64) -> Self {
        QSqrt5 { a: Ratio::new(n, d), b: Ratio::zero() }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(n, 1)
    }

    /// (1 + sqrt 5) / 2, negated: the order-5 pairing constant.
    fn neg_golden() -> Self {
        QSqrt5 { a: Ratio::new(-1, 2), b: Ratio::new(-1, 2) }
    }
}

impl Add for QSqrt5 {
    type Output = QSqrt5;
    fn add(self, rhs: QSqrt5) -> QSqrt5 {
        QSqrt5 { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl Sub for QSqrt5 {
    type Output = QSqrt5;
    fn sub(self, rhs: QSqrt5) -> QSqrt5 {
        QSqrt5 { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl Mul for QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, rhs: QSqrt5) -> QSqrt5 {
        QSqrt5 {
            a: self.a * rhs.a + self.b * rhs.b * Ratio::new(5, 1),
            b: self.a * rhs.b + self.b * rhs.a,
        }
    }
}

impl Neg for QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        QSqrt5 { a: -self.a, b: -self.b }
    }
}

/// A group element in the reflection representation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    entries: [[QSqrt5; 3]; 3],
}

impl GroupElement {
    pub fn identity() -> Self {
        let zero = QSqrt5::int(0);
        let one = QSqrt5::int(1);
        let mut entries = [[zero; 3]; 3];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = one;
        }
        GroupElement { entries }
    }

    pub fn mul(&self, rhs: &GroupElement) -> GroupElement {
        let zero = QSqrt5::int(0);
        let mut out = [[zero; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = zero;
                for (k, rhs_row) in rhs.entries.iter().enumerate() {
                    acc = acc + self.entries[i][k] * rhs_row[j];
                }
                out[i][j] = acc;
            }
        }
        GroupElement { entries: out }
    }
}

/// Symmetric rank-3 Coxeter matrix: `m[i][i] = 1`, `m[i][j] = m[j][i] >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    m: [[u32; 3]; 3],
}

impl CoxeterMatrix {
    /// Builds the matrix from the off-diagonal orders (m12, m23, m13).
    pub fn new(m12: u32, m23: u32, m13: u32) -> Result<Self, Error> {
        let m = [[1, m12, m13], [m12, 1, m23], [m13, m23, 1]];
        for i in 0..3 {
            for j in 0..3 {
                if i != j && !(2..=6).contains(&m[i][j]) {
                    if m[i][j] < 2 {
                        return Err(Error::InvalidCoxeterMatrix {
                            reason: "off-diagonal orders must be at least 2",
                        });
                    }
                    return Err(Error::BadCoxeterOrder { i, j, m: m[i][j] });
                }
            }
        }
        Ok(CoxeterMatrix { m })
    }

    pub fn orders(&self) -> (u32, u32, u32) {
        (self.m[0][1], self.m[1][2], self.m[0][2])
    }

    /// A3: the symmetric group S4, 24 elements.
    pub fn a3() -> Self {
        Self::new(3, 3, 2).expect("A3 orders are supported")
    }

    /// B3: the hyperoctahedral group, 48 elements.
    pub fn b3() -> Self {
        Self::new(4, 3, 2).expect("B3 orders are supported")
    }

    /// H3: the icosahedral reflection group, 120 elements.
    pub fn h3() -> Self {
        Self::new(5, 3, 2).expect("H3 orders are supported")
    }

    /// The three reflection generators in the geometric representation:
    /// sigma_i maps e_j to e_j - c_ij * e_i with c_ii = 2 and
    /// c_ij * c_ji = 4 cos^2(pi / m_ij).
    fn generators(&self) -> [GroupElement; 3] {
        let pairing = |i: usize, j: usize| -> QSqrt5 {
            match self.m[i][j] {
                2 => QSqrt5::int(0),
                3 => QSqrt5::int(-1),
                4 => QSqrt5::int(if i < j { -1 } else { -2 }),
                5 => QSqrt5::neg_golden(),
                6 => QSqrt5::int(if i < j { -1 } else { -3 }),
                other => unreachable!("order {other} rejected at construction"),
            }
        };
        std::array::from_fn(|i| {
            let mut g = GroupElement::identity();
            for j in 0..3 {
                g.entries[i][j] = if i == j {
                    QSqrt5::int(-1)
                } else {
                    -pairing(i, j)
                };
            }
            g
        })
    }
}

/// Cayley graph of a Coxeter group plus the word map: `words[v]` is a
/// shortest generator word for the element at vertex `v` ("e" for the
/// identity, letters a, b, c for the three generators).
#[derive(Clone, Debug)]
pub struct CayleyGraph {
    pub graph: Graph,
    pub words: Vec<String>,
}

pub const DEFAULT_ELEMENT_CAP: usize = 10_000;

/// Generates the group by breadth-first multiplication from the identity.
/// Vertices are numbered in discovery order (identity = 0, generators tried
/// in order a, b, c); edges join x and x*s for each generator s.
pub fn coxeter_cayley_capped(cm: &CoxeterMatrix, cap: usize) -> Result<CayleyGraph, Error> {
    let gens = cm.generators();
    let letters = ['a', 'b', 'c'];
    let identity = GroupElement::identity();
    let mut index: HashMap<GroupElement, u32> = HashMap::from([(identity, 0)]);
    let mut elements = vec![identity];
    let mut words = vec!["e".to_string()];
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut head = 0usize;
    while head < elements.len() {
        let x = elements[head];
        for (gi, gen) in gens.iter().enumerate() {
            let y = x.mul(gen);
            let yid = match index.get(&y) {
                Some(&id) => id,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::ElementCapExceeded { cap });
                    }
                    let id = elements.len() as u32;
                    index.insert(y, id);
                    elements.push(y);
                    let mut w = words[head].clone();
                    if w == "e" {
                        w.clear();
                    }
                    w.push(letters[gi]);
                    words.push(w);
                    id
                }
            };
            edges.push((head as u32, yid));
        }
        head += 1;
    }
    let graph = Graph::new(elements.len() as u32, &edges)?;
    Ok(CayleyGraph { graph, words })
}

pub fn coxeter_cayley(cm: &CoxeterMatrix) -> Result<CayleyGraph, Error> {
    coxeter_cayley_capped(cm, DEFAULT_ELEMENT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_involutions() {
        for cm in [CoxeterMatrix::a3(), CoxeterMatrix::b3(), CoxeterMatrix::h3()] {
            for gen in cm.generators() {
                assert_eq!(gen.mul(&gen), GroupElement::identity());
                assert_ne!(gen, GroupElement::identity());
            }
        }
    }

    #[test]
    fn pair_products_have_the_prescribed_orders() {
        let cm = CoxeterMatrix::h3();
        let gens = cm.generators();
        let expected = [(0, 1, 5u32), (1, 2, 3), (0, 2, 2)];
        for (i, j, order) in expected {
            let prod = gens[i].mul(&gens[j]);
            let mut acc = GroupElement::identity();
            let mut actual = 0;
            for step in 1..=30 {
                acc = acc.mul(&prod);
                if acc == GroupElement::identity() {
                    actual = step;
                    break;
                }
            }
            assert_eq!(actual, order);
        }
    }

    #[test]
    fn group_orders_a3_b3_h3() {
        assert_eq!(coxeter_cayley(&CoxeterMatrix::a3()).unwrap().graph.n(), 24);
        assert_eq!(coxeter_cayley(&CoxeterMatrix::b3()).unwrap().graph.n(), 48);
        assert_eq!(coxeter_cayley(&CoxeterMatrix::h3()).unwrap().graph.n(), 120);
    }

    #[test]
    fn cayley_graphs_are_cubic_and_loop_free() {
        let cay = coxeter_cayley(&CoxeterMatrix::b3()).unwrap();
        assert!(cay.graph.is_cubic());
        assert_eq!(cay.words[0], "e");
        assert_eq!(cay.graph.n() as usize, cay.words.len());
    }

    #[test]
    fn infinite_group_hits_the_cap() {
        // affine (6,3,2) never closes
        let cm = CoxeterMatrix::new(6, 3, 2).unwrap();
        assert!(matches!(
            coxeter_cayley_capped(&cm, 300),
            Err(Error::ElementCapExceeded { cap: 300 })
        ));
    }

    #[test]
    fn unsupported_orders_rejected() {
        assert_eq!(
            CoxeterMatrix::new(7, 3, 2),
            Err(Error::BadCoxeterOrder { i: 0, j: 1, m: 7 })
        );
        assert_eq!(
            CoxeterMatrix::new(1, 3, 2),
            Err(Error::InvalidCoxeterMatrix { reason: "off-diagonal orders must be at least 2" })
        );
    }
}
