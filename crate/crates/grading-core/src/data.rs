//! The specifying datum and its validation.

use lattice_geometry::cone::Cone2;
use lattice_geometry::fiber::FiberEnumerator;
use lattice_geometry::mat::generates_lattice;
use lattice_geometry::vec2::{v, Vec2};
use serde::{Deserialize, Serialize};

use crate::GradingError;

/// Raw input: the degrees of the seven generators, stored as the two rows of
/// a 2×7 integer matrix, and the degree of the single relation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpecifyingData {
    pub degree_matrix: [[i64; 7]; 2],
    pub relation_degree: [i64; 2],
}

impl SpecifyingData {
    pub fn from_columns(columns: &[Vec2; 7], mu: Vec2) -> SpecifyingData {
        let mut degree_matrix = [[0i64; 7]; 2];
        for (j, w) in columns.iter().enumerate() {
            degree_matrix[0][j] = w.x;
            degree_matrix[1][j] = w.y;
        }
        SpecifyingData {
            degree_matrix,
            relation_degree: [mu.x, mu.y],
        }
    }

    pub fn columns(&self) -> [Vec2; 7] {
        let mut cols = [Vec2::ZERO; 7];
        for (j, c) in cols.iter_mut().enumerate() {
            *c = v(self.degree_matrix[0][j], self.degree_matrix[1][j]);
        }
        cols
    }

    pub fn mu(&self) -> Vec2 {
        v(self.relation_degree[0], self.relation_degree[1])
    }

    /// Runs the full validation cascade and caches the derived cones.
    ///
    /// Checks, in order: pointedness, almost-freeness (every six-column
    /// subset generates ℤ²), a nonzero relation degree distinct from every
    /// generator degree, a nonempty monomial fiber, and counter-clockwise
    /// column order.
    pub fn validate(&self) -> Result<ValidData, GradingError> {
        let columns = self.columns();
        if columns.iter().any(|w| w.is_zero()) {
            return Err(GradingError::NotPointed);
        }
        let eff = Cone2::hull(&columns)?;

        for omitted in 0..7 {
            let rest: Vec<Vec2> = columns
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != omitted)
                .map(|(_, &w)| w)
                .collect();
            if !generates_lattice(&rest) {
                return Err(GradingError::NotAlmostFree { omitted });
            }
        }

        let mu = self.mu();
        if mu.is_zero() {
            return Err(GradingError::RelationDegreeZero);
        }
        if let Some(index) = columns.iter().position(|&w| w == mu) {
            return Err(GradingError::RelationDegreeIsGenerator { index });
        }

        let fiber = FiberEnumerator::new(&columns)?;
        if !fiber.monoid_contains(mu) {
            return Err(GradingError::EmptyFiber);
        }

        for position in 1..7 {
            if columns[position - 1].det(columns[position]) < 0 {
                return Err(GradingError::NotCcwOrdered { position });
            }
        }

        let mov = moving_cone_of(&columns);
        let minus_k = columns.iter().fold(Vec2::ZERO, |a, &w| a + w) - mu;
        Ok(ValidData {
            raw: self.clone(),
            columns,
            mu,
            eff,
            mov,
            minus_k,
        })
    }
}

fn moving_cone_of(columns: &[Vec2; 7]) -> Cone2 {
    let mut mov: Option<Cone2> = None;
    for omitted in 0..7 {
        let rest: Vec<Vec2> = columns
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != omitted)
            .map(|(_, &w)| w)
            .collect();
        let hull = Cone2::hull(&rest).expect("subcone of a pointed cone is pointed");
        mov = Some(match mov {
            None => hull,
            Some(prev) => prev.intersect(&hull),
        });
    }
    mov.expect("seven columns processed")
}

/// A validated specifying datum with its derived cones.
#[derive(Clone, Debug)]
pub struct ValidData {
    raw: SpecifyingData,
    columns: [Vec2; 7],
    mu: Vec2,
    eff: Cone2,
    mov: Cone2,
    minus_k: Vec2,
}

impl ValidData {
    pub fn data(&self) -> &SpecifyingData {
        &self.raw
    }

    pub fn columns(&self) -> &[Vec2; 7] {
        &self.columns
    }

    pub fn mu(&self) -> Vec2 {
        self.mu
    }

    /// Convex hull of all column degrees.
    pub fn effective_cone(&self) -> &Cone2 {
        &self.eff
    }

    /// Intersection of the hulls of all six-column subsets.
    pub fn moving_cone(&self) -> &Cone2 {
        &self.mov
    }

    /// Sum of the generator degrees minus the relation degree.
    pub fn anticanonical_class(&self) -> Vec2 {
        self.minus_k
    }

    /// Enumerator for monomial fibers of this degree system.
    pub fn fiber(&self) -> FiberEnumerator {
        FiberEnumerator::new(&self.columns).expect("validated columns are pointed")
    }
}
