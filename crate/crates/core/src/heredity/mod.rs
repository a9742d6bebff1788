//! Heredity data on a graded superalgebra and its verification.

mod based;
mod checks;
mod poset;

pub use based::{Axiom, AxiomFailure, BasedAlgebra, CellIdeal, HeredityReport};
pub use checks::{
    check_standardly_based, AntiInvolution, ChainStep, InvolutionReport, SplitChainReport, StandardBasisCandidate,
    StandardBasisReport,
};
pub use poset::Poset;

use crate::algebra::AlgebraElement;
use crate::error::Error;

/// The sets `X(i)`, `Y(i)` of one poset element. `initial` indexes the initial element
/// inside `x`; the same element must also occur in `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub x: Vec<AlgebraElement>,
    pub y: Vec<AlgebraElement>,
    pub initial: usize,
}

impl Cell {
    pub fn new(x: Vec<AlgebraElement>, y: Vec<AlgebraElement>, initial: usize) -> Self {
        Cell { x, y, initial }
    }

    pub fn initial_element(&self) -> &AlgebraElement {
        &self.x[self.initial]
    }

    /// Position of the initial element in `y`.
    pub fn initial_y(&self) -> usize {
        self.y
            .iter()
            .position(|y| y == self.initial_element())
            .expect("checked at construction")
    }

    pub fn size(&self) -> usize {
        self.x.len() * self.y.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeredityData {
    poset: Poset,
    cells: Vec<Cell>,
}

impl HeredityData {
    /// `cells[i]` belongs to poset element `i`.
    pub fn new(poset: Poset, cells: Vec<Cell>) -> Result<Self, Error> {
        if cells.len() != poset.len() {
            return Err(Error::MalformedHeredity(format!(
                "{} cells for {} poset elements",
                cells.len(),
                poset.len()
            )));
        }
        for (i, c) in cells.iter().enumerate() {
            let name = poset.label(i);
            if c.x.is_empty() || c.y.is_empty() {
                return Err(Error::MalformedHeredity(format!("cell {name} has empty X or Y")));
            }
            if c.initial >= c.x.len() {
                return Err(Error::MalformedHeredity(format!(
                    "initial element of cell {name} out of range"
                )));
            }
            if !c.y.contains(c.initial_element()) {
                return Err(Error::MalformedHeredity(format!(
                    "initial element of cell {name} is not in Y"
                )));
            }
        }
        Ok(HeredityData { poset, cells })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &Cell {
        &self.cells[i]
    }

    pub fn initial(&self, i: usize) -> &AlgebraElement {
        self.cells[i].initial_element()
    }

    /// `|B|`, the number of pairs `(x, y)`.
    pub fn basis_size(&self) -> usize {
        self.cells.iter().map(Cell::size).sum()
    }

    pub fn into_parts(self) -> (Poset, Vec<Cell>) {
        (self.poset, self.cells)
    }
}
