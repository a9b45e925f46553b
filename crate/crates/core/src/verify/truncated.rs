use std::collections::{BTreeMap, HashMap};

use rug::Float;

use crate::error::Result;
use crate::generators::{basis_action_with, Gen, TableLabel, Tables};
use crate::qarith::EvalContext;
use crate::repspace::{Signature, Truncation, Weight};

/// Sparse vector over basis indices.
pub type SparseVec = BTreeMap<usize, Float>;

/// Column-compressed sparse matrix with a row index for transposes.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    cols: Vec<Vec<(usize, Float)>>,
    rows: Vec<Vec<(usize, Float)>>,
    /// Table entry behind each nonzero, keyed by `(row, col)`.
    entries: HashMap<(usize, usize), &'static str>,
}

impl SparseMatrix {
    fn new(n: usize) -> Self {
        SparseMatrix { cols: vec![Vec::new(); n], rows: vec![Vec::new(); n], entries: HashMap::new() }
    }

    fn push(&mut self, row: usize, col: usize, value: Float, entry: Option<&'static str>) {
        self.rows[row].push((col, value.clone()));
        self.cols[col].push((row, value));
        if let Some(e) = entry {
            self.entries.insert((row, col), e);
        }
    }

    pub fn column(&self, col: usize) -> &[(usize, Float)] {
        &self.cols[col]
    }

    pub fn row(&self, row: usize) -> &[(usize, Float)] {
        &self.rows[row]
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&Float> {
        self.cols[col].iter().find(|(r, _)| *r == row).map(|(_, v)| v)
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<&'static str> {
        self.entries.get(&(row, col)).copied()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }
}

/// Finite window onto a representation: an ordered basis, the nine
/// generator matrices restricted to it, and the interior columns on which
/// words of length two never leave the window.
#[derive(Clone, Debug)]
pub struct TruncatedRep<L> {
    pub sig: Signature,
    pub trunc: Truncation,
    pub basis: Vec<L>,
    index: HashMap<L, usize>,
    mats: BTreeMap<Gen, SparseMatrix>,
    interior: Vec<bool>,
    weights: Vec<Weight>,
    ctx: EvalContext,
}

impl<L: TableLabel> TruncatedRep<L> {
    pub fn build(sig: &Signature, trunc: &Truncation, ctx: &EvalContext) -> Result<Self> {
        Self::build_with(Tables::standard(), sig, trunc, ctx)
    }

    pub fn build_with(tables: &Tables, sig: &Signature, trunc: &Truncation, ctx: &EvalContext) -> Result<Self> {
        let basis = L::enumerate(sig, trunc);
        let index: HashMap<L, usize> = basis.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        let n = basis.len();
        let mut mats = BTreeMap::new();
        for g in Gen::all() {
            let mut m = SparseMatrix::new(n);
            for (col, label) in basis.iter().enumerate() {
                for term in basis_action_with(tables, sig, g, label, ctx)? {
                    if let Some(&row) = index.get(&term.target) {
                        m.push(row, col, term.coeff.to_float(ctx), term.entry);
                    }
                }
            }
            mats.insert(g, m);
        }
        let interior = basis
            .iter()
            .map(|l| {
                Gen::all().iter().all(|g1| {
                    tables.structural_targets(sig, *g1, l).iter().filter(|x| x.validate(sig).is_ok()).all(|x| {
                        x.within(trunc)
                            && Gen::all().iter().all(|g2| {
                                tables
                                    .structural_targets(sig, *g2, x)
                                    .iter()
                                    .filter(|y| y.validate(sig).is_ok())
                                    .all(|y| y.within(trunc))
                            })
                    })
                })
            })
            .collect();
        let weights = basis.iter().map(|l| l.weight_unchecked(sig)).collect();
        Ok(TruncatedRep {
            sig: *sig,
            trunc: *trunc,
            basis,
            index,
            mats,
            interior,
            weights,
            ctx: ctx.to_float_mode(),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ctx(&self) -> &EvalContext {
        &self.ctx
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn matrix(&self, g: Gen) -> &SparseMatrix {
        &self.mats[&g]
    }

    pub fn is_interior(&self, i: usize) -> bool {
        self.interior[i]
    }

    pub fn interior_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|i| self.interior[*i]).collect()
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.weights[i]
    }

    pub fn unit(&self, i: usize) -> SparseVec {
        let mut v = SparseVec::new();
        v.insert(i, Float::with_val(self.ctx.prec(), 1));
        v
    }

    /// `g v`, dropping components that leave the window.
    pub fn apply(&self, g: Gen, v: &SparseVec) -> SparseVec {
        let m = self.matrix(g);
        let mut out = SparseVec::new();
        for (col, x) in v {
            for (row, a) in m.column(*col) {
                add_to(&mut out, *row, Float::with_val(self.ctx.prec(), a * x));
            }
        }
        out
    }

    /// `g^† v` in the orthonormal basis, i.e. the transpose.
    pub fn apply_adjoint(&self, g: Gen, v: &SparseVec) -> SparseVec {
        let m = self.matrix(g);
        let mut out = SparseVec::new();
        for (row, x) in v {
            for (col, a) in m.row(*row) {
                add_to(&mut out, *col, Float::with_val(self.ctx.prec(), a * x));
            }
        }
        out
    }

    /// Diagonal operator with entries `f(label, weight)`.
    pub fn apply_diag<F>(&self, v: &SparseVec, f: F) -> SparseVec
    where
        F: Fn(&L, &Weight) -> Float,
    {
        v.iter()
            .map(|(i, x)| (*i, Float::with_val(self.ctx.prec(), x * &f(&self.basis[*i], &self.weights[*i]))))
            .collect()
    }
}

pub(crate) fn add_to(v: &mut SparseVec, i: usize, x: Float) {
    match v.get_mut(&i) {
        Some(y) => *y += x,
        None => {
            v.insert(i, x);
        }
    }
}

/// `a + c b`.
pub(crate) fn axpy(a: &mut SparseVec, c: &Float, b: &SparseVec) {
    for (i, x) in b {
        add_to(a, *i, Float::with_val(c.prec(), c * x));
    }
}

pub(crate) fn max_abs(v: &SparseVec) -> f64 {
    v.values().map(|x| x.to_f64().abs()).fold(0.0, f64::max)
}

/// Index and magnitude of the largest entry.
pub(crate) fn argmax_abs(v: &SparseVec) -> Option<(usize, f64)> {
    v.iter()
        .map(|(i, x)| (*i, x.to_f64().abs()))
        .fold(None, |best, (i, x)| match best {
            Some((_, b)) if b >= x => best,
            _ => Some((i, x)),
        })
}
