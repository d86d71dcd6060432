//! Polynomial ring contexts: a shape (grid or multidimensional array of
//! variables), a coefficient field, and optionally a block of auxiliary
//! variables used by elimination-based operations.
//!
//! Variables are interned as dense ids. The roster order is row-major for a
//! grid (x[1,1], x[1,2], ..., x[m,n]) and lexicographic by index vector for a
//! multidimensional shape, with auxiliary variables after the base roster.
//! Ascending id therefore equals descending diagonal-lex priority, which the
//! order module exploits.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::field::Field;

/// Index of a variable inside its ring's roster.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(pub u16);

/// What a variable id stands for.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VarKind {
    /// Entry x[row, col] of a generic matrix, 1-based.
    Grid { row: u16, col: u16 },
    /// Entry x[i1, ..., id] of a generic array, 1-based per axis.
    Multi(Vec<u16>),
    /// Auxiliary variable t[k] introduced for elimination.
    Aux(u16),
}

/// Variable layout of a ring before auxiliary variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Shape {
    Grid { rows: u16, cols: u16 },
    Multi(Vec<u16>),
}

impl Shape {
    pub fn grid(rows: u16, cols: u16) -> Shape {
        Shape::Grid { rows, cols }
    }

    pub fn multi(axes: &[u16]) -> Shape {
        Shape::Multi(axes.to_vec())
    }

    pub fn base_vars(&self) -> usize {
        match self {
            Shape::Grid { rows, cols } => *rows as usize * *cols as usize,
            Shape::Multi(axes) => axes.iter().map(|&a| a as usize).product(),
        }
    }

    /// Axis lengths, viewing a grid as a two-axis array.
    pub fn axes(&self) -> Vec<u16> {
        match self {
            Shape::Grid { rows, cols } => alloc::vec![*rows, *cols],
            Shape::Multi(axes) => axes.clone(),
        }
    }

    fn validate(&self) -> Result<(), Error> {
        let axes = self.axes();
        if axes.is_empty() {
            return Err(Error::Invalid("shape needs at least one axis".into()));
        }
        if axes.iter().any(|&a| a == 0) {
            return Err(Error::Invalid("axis lengths must be positive".into()));
        }
        if self.base_vars() > u16::MAX as usize {
            return Err(Error::Invalid("shape is too large".into()));
        }
        Ok(())
    }
}

/// A polynomial ring over `F` with variables laid out by `shape`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ring<F: Field> {
    shape: Shape,
    field: F,
    aux: u16,
}

impl<F: Field> Ring<F> {
    pub fn new(shape: Shape, field: F) -> Result<Self, Error> {
        shape.validate()?;
        Ok(Ring { shape, field, aux: 0 })
    }

    pub fn grid(rows: u16, cols: u16, field: F) -> Result<Self, Error> {
        Ring::new(Shape::grid(rows, cols), field)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn aux_count(&self) -> u16 {
        self.aux
    }

    pub fn base_vars(&self) -> usize {
        self.shape.base_vars()
    }

    pub fn num_vars(&self) -> usize {
        self.base_vars() + self.aux as usize
    }

    /// Same shape and field with `extra` more auxiliary variables. Polynomials
    /// of `self` are valid verbatim in the extended ring.
    pub fn with_extra_aux(&self, extra: u16) -> Result<Ring<F>, Error> {
        if self.base_vars() + (self.aux + extra) as usize > u16::MAX as usize {
            return Err(Error::Invalid("too many auxiliary variables".into()));
        }
        Ok(Ring { shape: self.shape.clone(), field: self.field.clone(), aux: self.aux + extra })
    }

    /// The ring with all auxiliary variables dropped.
    pub fn without_aux(&self) -> Ring<F> {
        Ring { shape: self.shape.clone(), field: self.field.clone(), aux: 0 }
    }

    pub fn var_grid(&self, row: u16, col: u16) -> Result<VarId, Error> {
        match &self.shape {
            Shape::Grid { rows, cols } => {
                if row == 0 || col == 0 || row > *rows || col > *cols {
                    return Err(Error::ContextMismatch(format!(
                        "x[{row},{col}] outside {rows} x {cols} grid"
                    )));
                }
                Ok(VarId((row - 1) * *cols + (col - 1)))
            }
            Shape::Multi(_) => self.var_multi(&[row, col]),
        }
    }

    pub fn var_multi(&self, index: &[u16]) -> Result<VarId, Error> {
        let axes = self.shape.axes();
        if index.len() != axes.len() {
            return Err(Error::ContextMismatch(format!(
                "index of length {} in a shape with {} axes",
                index.len(),
                axes.len()
            )));
        }
        let mut flat = 0usize;
        for (&i, &a) in index.iter().zip(axes.iter()) {
            if i == 0 || i > a {
                return Err(Error::ContextMismatch(format!(
                    "index component {i} outside axis of length {a}"
                )));
            }
            flat = flat * a as usize + (i - 1) as usize;
        }
        Ok(VarId(flat as u16))
    }

    pub fn var_aux(&self, tag: u16) -> Result<VarId, Error> {
        if tag >= self.aux {
            return Err(Error::ContextMismatch(format!(
                "aux variable t[{tag}] outside the {} declared",
                self.aux
            )));
        }
        Ok(VarId((self.base_vars() + tag as usize) as u16))
    }

    /// All auxiliary variable ids, ascending.
    pub fn aux_vars(&self) -> Vec<VarId> {
        let base = self.base_vars();
        (0..self.aux as usize).map(|k| VarId((base + k) as u16)).collect()
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        (v.0 as usize) < self.num_vars()
    }

    pub fn kind(&self, v: VarId) -> Result<VarKind, Error> {
        let base = self.base_vars();
        let idx = v.0 as usize;
        if idx >= self.num_vars() {
            return Err(Error::ContextMismatch(format!("variable id {} outside ring", v.0)));
        }
        if idx >= base {
            return Ok(VarKind::Aux((idx - base) as u16));
        }
        match &self.shape {
            Shape::Grid { cols, .. } => Ok(VarKind::Grid {
                row: (idx / *cols as usize) as u16 + 1,
                col: (idx % *cols as usize) as u16 + 1,
            }),
            Shape::Multi(axes) => {
                let mut rest = idx;
                let mut index = alloc::vec![0u16; axes.len()];
                for (slot, &a) in index.iter_mut().zip(axes.iter()).rev() {
                    *slot = (rest % a as usize) as u16 + 1;
                    rest /= a as usize;
                }
                Ok(VarKind::Multi(index))
            }
        }
    }

    pub fn var_name(&self, v: VarId) -> Result<String, Error> {
        match self.kind(v)? {
            VarKind::Grid { row, col } => Ok(format!("x[{row},{col}]")),
            VarKind::Multi(index) => {
                let mut s = String::from("x[");
                for (pos, i) in index.iter().enumerate() {
                    if pos > 0 {
                        s.push(',');
                    }
                    s.push_str(&format!("{i}"));
                }
                s.push(']');
                Ok(s)
            }
            VarKind::Aux(tag) => Ok(format!("t[{tag}]")),
        }
    }

    /// Grid dimensions, or an error for non-grid shapes.
    pub fn grid_dims(&self) -> Result<(u16, u16), Error> {
        match &self.shape {
            Shape::Grid { rows, cols } => Ok((*rows, *cols)),
            Shape::Multi(_) => Err(Error::ContextMismatch("grid shape required".into())),
        }
    }
}

impl<F: Field> fmt::Display for Ring<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ch = self.field.characteristic();
        let base: Vec<String> =
            self.shape.axes().iter().map(|a| format!("{a}")).collect();
        write!(f, "ring(char {ch}, shape {}", base.join("x"))?;
        if self.aux > 0 {
            write!(f, ", aux {}", self.aux)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn grid_roster_is_row_major() {
        let r = Ring::grid(3, 4, Rationals).unwrap();
        assert_eq!(r.var_grid(1, 1).unwrap(), VarId(0));
        assert_eq!(r.var_grid(1, 4).unwrap(), VarId(3));
        assert_eq!(r.var_grid(2, 1).unwrap(), VarId(4));
        assert_eq!(r.var_grid(3, 4).unwrap(), VarId(11));
        assert!(r.var_grid(0, 1).is_err());
        assert!(r.var_grid(4, 1).is_err());
        assert_eq!(
            r.kind(VarId(7)).unwrap(),
            VarKind::Grid { row: 2, col: 4 }
        );
    }

    #[test]
    fn multi_roster_is_lexicographic() {
        let r = Ring::new(Shape::multi(&[2, 2, 3]), Rationals).unwrap();
        assert_eq!(r.var_multi(&[1, 1, 1]).unwrap(), VarId(0));
        assert_eq!(r.var_multi(&[1, 1, 3]).unwrap(), VarId(2));
        assert_eq!(r.var_multi(&[1, 2, 1]).unwrap(), VarId(3));
        assert_eq!(r.var_multi(&[2, 1, 1]).unwrap(), VarId(6));
        assert_eq!(r.var_multi(&[2, 2, 3]).unwrap(), VarId(11));
        assert_eq!(r.kind(VarId(5)).unwrap(), VarKind::Multi(alloc::vec![1, 2, 3]));
        assert!(r.var_multi(&[1, 1]).is_err());
        assert!(r.var_multi(&[3, 1, 1]).is_err());
    }

    #[test]
    fn aux_variables_follow_the_base_roster() {
        let r = Ring::grid(2, 2, Rationals).unwrap().with_extra_aux(2).unwrap();
        assert_eq!(r.var_aux(0).unwrap(), VarId(4));
        assert_eq!(r.var_aux(1).unwrap(), VarId(5));
        assert!(r.var_aux(2).is_err());
        assert_eq!(r.var_name(VarId(5)).unwrap(), "t[1]");
        assert_eq!(r.var_name(VarId(1)).unwrap(), "x[1,2]");
        assert_eq!(r.kind(VarId(4)).unwrap(), VarKind::Aux(0));
    }
}
