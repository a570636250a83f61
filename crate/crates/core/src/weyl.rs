//! Weyl group actions on weights (omega basis) and on torus points (alpha^vee
//! basis, modulo the coroot lattice).

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_rational::Rational64;

use crate::exact;
use crate::liealg::{AlgebraData, Weight};
use crate::{Error, Result};

/// A Weyl orbit, stored sorted so set equality is structural equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylOrbit {
    elements: Vec<Weight>,
}

impl WeylOrbit {
    pub fn elements(&self) -> &[Weight] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.elements.binary_search(w).is_ok()
    }
}

/// A point of the torus `R^n / Q^vee` in alpha^vee-coordinates.
///
/// Points built from exact rationals are reduced into `[0, 1)` and keep their
/// exact coordinates; only those can be fed to [`epsilon`].
#[derive(Debug, Clone, PartialEq)]
pub struct TorusPoint {
    coords: Vec<f64>,
    exact: Option<Vec<Rational64>>,
}

impl TorusPoint {
    pub fn new(coords: impl Into<Vec<f64>>) -> Self {
        Self {
            coords: coords.into(),
            exact: None,
        }
    }

    pub fn exact(coords: impl IntoIterator<Item = Rational64>) -> Self {
        let exact: Vec<Rational64> = coords.into_iter().map(exact::frac).collect();
        Self {
            coords: exact.iter().map(|&q| exact::to_f64(q)).collect(),
            exact: Some(exact),
        }
    }

    pub fn origin(rank: usize) -> Self {
        Self::exact(vec![Rational64::from_integer(0); rank])
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn exact_coords(&self) -> Option<&[Rational64]> {
        self.exact.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }
}

/// `r_i lambda = lambda - lambda_i * (row i of C)`, with `i` 0-based.
pub fn reflect(data: &AlgebraData, i: usize, lambda: &Weight) -> Weight {
    let row = &data.cartan()[i];
    let li = lambda.coords()[i];
    Weight(
        lambda
            .coords()
            .iter()
            .zip(row)
            .map(|(l, c)| l - li * c)
            .collect(),
    )
}

/// Orbit by breadth-first closure under the simple reflections.
pub fn orbit(data: &AlgebraData, lambda: &Weight) -> WeylOrbit {
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut queue = VecDeque::from([lambda.clone()]);
    seen.insert(lambda.clone());
    while let Some(w) = queue.pop_front() {
        for i in 0..data.rank() {
            let image = reflect(data, i, &w);
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    WeylOrbit {
        elements: seen.into_iter().collect(),
    }
}

/// `h_lambda = |W| / |W lambda|`.
pub fn stabilizer_order(data: &AlgebraData, lambda: &Weight) -> u64 {
    data.weyl_order() / orbit(data, lambda).len() as u64
}

/// `r_i` on alpha^vee-coordinates: `a_i <- a_i - sum_k C_ik a_k`.
pub fn reflect_point(data: &AlgebraData, i: usize, x: &TorusPoint) -> TorusPoint {
    let row = &data.cartan()[i];
    match x.exact_coords() {
        Some(q) => {
            let pairing = q
                .iter()
                .zip(row)
                .fold(Rational64::from_integer(0), |acc, (a, &c)| acc + a * c);
            let mut out = q.to_vec();
            out[i] -= pairing;
            TorusPoint::exact(out)
        }
        None => {
            let pairing: f64 = x.coords().iter().zip(row).map(|(a, &c)| a * c as f64).sum();
            let mut out = x.coords().to_vec();
            out[i] -= pairing;
            TorusPoint::new(out)
        }
    }
}

/// Size of the W-orbit of `x` on the torus, by exact closure with every
/// coordinate reduced modulo 1.
pub fn epsilon(data: &AlgebraData, x: &TorusPoint) -> Result<u64> {
    data.check_rank(x.rank())?;
    let start = x.exact_coords().ok_or(Error::InexactPoint)?.to_vec();
    let mut seen: HashSet<Vec<Rational64>> = HashSet::new();
    let mut queue = vec![start.clone()];
    seen.insert(start);
    while let Some(p) = queue.pop() {
        for (i, row) in data.cartan().iter().enumerate() {
            let pairing = p
                .iter()
                .zip(row)
                .fold(Rational64::from_integer(0), |acc, (a, &c)| acc + a * c);
            let mut image = p.clone();
            image[i] = exact::frac(image[i] - pairing);
            if seen.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    Ok(seen.len() as u64)
}

/// One element of W as an integer matrix acting on omega-coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    matrix: Vec<Vec<i64>>,
    det: i8,
}

impl WeylElement {
    pub fn apply(&self, lambda: &Weight) -> Weight {
        Weight(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(lambda.coords()).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// `det(w) = (-1)^{length(w)}`.
    pub fn det(&self) -> i8 {
        self.det
    }
}

/// The whole Weyl group, enumerated breadth-first from the identity.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
}

impl WeylGroup {
    pub fn new(data: &AlgebraData) -> Self {
        let n = data.rank();
        let identity: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        // reflection matrices: (r_i)_{kl} = delta_kl - delta_il C_ik
        let gens: Vec<Vec<Vec<i64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        (0..n)
                            .map(|l| i64::from(k == l) - if l == i { data.cartan()[i][k] } else { 0 })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
        let mut elements = vec![WeylElement {
            matrix: identity.clone(),
            det: 1,
        }];
        seen.insert(identity);
        let mut head = 0;
        while head < elements.len() {
            let g = elements[head].clone();
            head += 1;
            for r in &gens {
                let prod: Vec<Vec<i64>> = (0..n)
                    .map(|k| {
                        (0..n)
                            .map(|l| (0..n).map(|m| r[k][m] * g.matrix[m][l]).sum())
                            .collect()
                    })
                    .collect();
                if seen.insert(prod.clone()) {
                    elements.push(WeylElement {
                        matrix: prod,
                        det: -g.det,
                    });
                }
            }
        }
        Self { elements }
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}
