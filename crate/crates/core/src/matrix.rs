//! Supermatrices over the graded algebra.
//!
//! Each matrix carries explicit block metadata for rows and columns: how many
//! indices are even and odd, and which block is listed first. Signs depend on
//! the parity of indices, never on their position, except for the
//! supertranspose, which follows the displayed-block formula (see
//! [`SuperMatrix::supertranspose`]).

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Element, GeneratorTable, Parity, RewriteSystem};
use crate::error::{Error, Result};
use crate::forms::SuperForm;
use crate::scalar::{Coeff, Gaussian};

/// Entry types a supermatrix can hold.
pub trait Graded: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero(table: &Arc<GeneratorTable>) -> Self;
    fn constant(table: &Arc<GeneratorTable>, c: Coeff) -> Self;
    fn table(&self) -> &Arc<GeneratorTable>;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, c: &Coeff) -> Self;
    fn diamond(&self) -> Self;
    /// Grassmann parity; `None` when mixed. Zero is even.
    fn parity(&self) -> Option<Parity>;
}

macro_rules! impl_graded {
    ($ty:ty) => {
        impl Graded for $ty {
            fn zero(table: &Arc<GeneratorTable>) -> Self {
                <$ty>::zero(table)
            }
            fn constant(table: &Arc<GeneratorTable>, c: Coeff) -> Self {
                Element::constant(table, c).into()
            }
            fn table(&self) -> &Arc<GeneratorTable> {
                <$ty>::table(self)
            }
            fn is_zero(&self) -> bool {
                <$ty>::is_zero(self)
            }
            fn add(&self, o: &Self) -> Self {
                self + o
            }
            fn sub(&self, o: &Self) -> Self {
                self - o
            }
            fn neg(&self) -> Self {
                -self
            }
            fn mul(&self, o: &Self) -> Self {
                self * o
            }
            fn scale(&self, c: &Coeff) -> Self {
                self.scale_coeff(c)
            }
            fn diamond(&self) -> Self {
                <$ty>::diamond(self)
            }
            fn parity(&self) -> Option<Parity> {
                self.grassmann_parity()
            }
        }
    };
}

impl Element {
    fn grassmann_parity(&self) -> Option<Parity> {
        self.parity()
    }
}

impl SuperForm {
    fn grassmann_parity(&self) -> Option<Parity> {
        match self.0.parity_bits() {
            (true, true) => None,
            (false, true) => Some(Parity::Odd),
            _ => Some(Parity::Even),
        }
    }
}

impl_graded!(Element);
impl_graded!(SuperForm);

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum BlockOrder {
    EvenFirst,
    OddFirst,
}

/// Grading of one matrix axis.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct BlockShape {
    pub even: usize,
    pub odd: usize,
    pub order: BlockOrder,
}

impl BlockShape {
    pub fn new(even: usize, odd: usize, order: BlockOrder) -> Self {
        BlockShape { even, odd, order }
    }

    pub fn even_first(even: usize, odd: usize) -> Self {
        BlockShape::new(even, odd, BlockOrder::EvenFirst)
    }

    pub fn odd_first(even: usize, odd: usize) -> Self {
        BlockShape::new(even, odd, BlockOrder::OddFirst)
    }

    pub fn dim(&self) -> usize {
        self.even + self.odd
    }

    fn first_len(&self) -> usize {
        match self.order {
            BlockOrder::EvenFirst => self.even,
            BlockOrder::OddFirst => self.odd,
        }
    }

    /// Whether index `i` belongs to the block listed first.
    pub fn in_first_block(&self, i: usize) -> bool {
        i < self.first_len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        match (self.order, self.in_first_block(i)) {
            (BlockOrder::EvenFirst, true) | (BlockOrder::OddFirst, false) => Parity::Even,
            _ => Parity::Odd,
        }
    }

    pub fn indices(&self, p: Parity) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity(i) == p).collect()
    }
}

/// A rectangular supermatrix with block metadata and an optional declared
/// parity.
#[derive(Clone, PartialEq)]
pub struct SuperMatrix<T> {
    table: Arc<GeneratorTable>,
    rows: BlockShape,
    cols: BlockShape,
    parity: Option<Parity>,
    entries: Vec<T>,
}

impl<T: Graded> SuperMatrix<T> {
    /// Builds a matrix, checking that every entry has the parity demanded by
    /// its position when a parity is declared.
    pub fn from_rows(
        table: &Arc<GeneratorTable>,
        rows: BlockShape,
        cols: BlockShape,
        parity: Option<Parity>,
        entries: Vec<Vec<T>>,
    ) -> Result<Self> {
        if entries.len() != rows.dim() || entries.iter().any(|r| r.len() != cols.dim()) {
            return Err(Error::Shape(format!(
                "expected {}×{} entries",
                rows.dim(),
                cols.dim()
            )));
        }
        let m = SuperMatrix {
            table: table.clone(),
            rows,
            cols,
            parity,
            entries: entries.into_iter().flatten().collect(),
        };
        if m.entries.iter().any(|e| e.table() != table) {
            return Err(Error::TableMismatch);
        }
        if let Some(p) = parity {
            for i in 0..rows.dim() {
                for j in 0..cols.dim() {
                    let e = m.get(i, j);
                    let want = p + rows.parity(i) + cols.parity(j);
                    if !e.is_zero() && e.parity() != Some(want) {
                        return Err(Error::Contract(format!(
                            "entry ({i},{j}) must be {want:?} in a {p:?} supermatrix"
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn from_fn(
        table: &Arc<GeneratorTable>,
        rows: BlockShape,
        cols: BlockShape,
        parity: Option<Parity>,
        mut f: impl FnMut(usize, usize) -> T,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.dim());
        for i in 0..rows.dim() {
            entries.push((0..cols.dim()).map(|j| f(i, j)).collect());
        }
        SuperMatrix::from_rows(table, rows, cols, parity, entries)
    }

    pub fn identity(table: &Arc<GeneratorTable>, shape: BlockShape) -> Self {
        SuperMatrix::from_fn(table, shape, shape, Some(Parity::Even), |i, j| {
            if i == j {
                T::constant(table, Coeff::one())
            } else {
                T::zero(table)
            }
        })
        .expect("identity is even")
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn rows(&self) -> BlockShape {
        self.rows
    }

    pub fn cols(&self) -> BlockShape {
        self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.dim()
    }

    pub fn ncols(&self) -> usize {
        self.cols.dim()
    }

    pub fn declared_parity(&self) -> Option<Parity> {
        self.parity
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols.dim() + j]
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.entries.iter()
    }

    pub fn row(&self, i: usize) -> &[T] {
        let n = self.cols.dim();
        &self.entries[i * n..(i + 1) * n]
    }

    /// Entrywise map that keeps the block metadata and declared parity.
    pub fn map<U: Graded>(&self, f: impl Fn(&T) -> U) -> SuperMatrix<U> {
        SuperMatrix {
            table: self.table.clone(),
            rows: self.rows,
            cols: self.cols,
            parity: self.parity,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn require_parity(&self, op: &str) -> Result<Parity> {
        self.parity
            .ok_or_else(|| Error::Contract(format!("{op} needs a homogeneous supermatrix")))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        let parity = if self.parity == o.parity { self.parity } else { None };
        Ok(SuperMatrix {
            entries: self.entries.iter().zip(&o.entries).map(|(x, y)| x.add(y)).collect(),
            parity,
            ..self.clone()
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        let parity = if self.parity == o.parity { self.parity } else { None };
        Ok(SuperMatrix {
            entries: self.entries.iter().zip(&o.entries).map(|(x, y)| x.sub(y)).collect(),
            parity,
            ..self.clone()
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        self.map(|x| x.scale(c))
    }

    /// `x·X` for a homogeneous entry-type scalar `x`.
    pub fn left_mul(&self, x: &T) -> Self {
        let mut out = self.map(|e| x.mul(e));
        out.parity = match (x.parity(), self.parity) {
            (Some(p), Some(q)) => Some(p + q),
            _ => None,
        };
        out
    }

    fn same_shape(&self, o: &Self) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Shape("operands have different block shapes".into()));
        }
        if self.table != o.table {
            return Err(Error::TableMismatch);
        }
        Ok(())
    }

    pub fn matmul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Shape(format!(
                "inner shapes {:?} and {:?} differ",
                self.cols, o.rows
            )));
        }
        if self.table != o.table {
            return Err(Error::TableMismatch);
        }
        let (n, k, m) = (self.nrows(), self.ncols(), o.ncols());
        let mut entries = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                let mut acc = T::zero(&self.table);
                for l in 0..k {
                    let x = self.get(i, l);
                    let y = o.get(l, j);
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc.add(&x.mul(y));
                    }
                }
                entries.push(acc);
            }
        }
        Ok(SuperMatrix {
            table: self.table.clone(),
            rows: self.rows,
            cols: o.cols,
            parity: match (self.parity, o.parity) {
                (Some(p), Some(q)) => Some(p + q),
                _ => None,
            },
            entries,
        })
    }

    /// Supertranspose by the displayed-block formula
    /// `[[A, B], [C, D]] ↦ [[Aᵗ, (−1)^{|X|}Cᵗ], [−(−1)^{|X|}Bᵗ, Dᵗ]]`,
    /// where `A` is whichever block the metadata lists first.
    ///
    /// For odd-first storage this is `(X^st)_{ij} = (−1)^{(|X|+|j|)(|i|+|j|)}X_{ji}`,
    /// which conjugates the even-first formula by the parity matrix; the
    /// graded transpose and trace laws hold for either.
    pub fn supertranspose(&self) -> Result<Self> {
        let p = self.require_parity("supertranspose")?;
        let sx = p == Parity::Odd;
        // new rows index old columns
        let rows = self.cols;
        let cols = self.rows;
        let entries = (0..rows.dim())
            .flat_map(|i| (0..cols.dim()).map(move |j| (i, j)))
            .map(|(i, j)| {
                let x = self.get(j, i);
                let neg = match (rows.in_first_block(i), cols.in_first_block(j)) {
                    (true, true) | (false, false) => false,
                    (true, false) => sx,
                    (false, true) => !sx,
                };
                if neg {
                    x.neg()
                } else {
                    x.clone()
                }
            })
            .collect();
        Ok(SuperMatrix {
            table: self.table.clone(),
            rows,
            cols,
            parity: self.parity,
            entries,
        })
    }

    /// `Str X = tr(even block) − (−1)^{|X|} tr(odd block)`.
    pub fn supertrace(&self) -> Result<T> {
        let p = self.require_parity("supertrace")?;
        if self.rows != self.cols {
            return Err(Error::Shape("supertrace of a non-square supermatrix".into()));
        }
        let mut acc = T::zero(&self.table);
        for i in 0..self.nrows() {
            let x = self.get(i, i);
            let plus = self.rows.parity(i) == Parity::Even || p == Parity::Odd;
            acc = if plus { acc.add(x) } else { acc.sub(x) };
        }
        Ok(acc)
    }

    /// `Str(XY)` without forming the off-diagonal entries of `XY`.
    pub fn supertrace_of_product(&self, o: &Self) -> Result<T> {
        let p = self.require_parity("supertrace")? + o.require_parity("supertrace")?;
        if self.cols != o.rows || self.rows != o.cols || self.rows != self.cols {
            return Err(Error::Shape("Str(XY) needs square XY".into()));
        }
        let mut acc = T::zero(&self.table);
        for i in 0..self.nrows() {
            let mut diag = T::zero(&self.table);
            for l in 0..self.ncols() {
                let (x, y) = (self.get(i, l), o.get(l, i));
                if !x.is_zero() && !y.is_zero() {
                    diag = diag.add(&x.mul(y));
                }
            }
            let plus = self.rows.parity(i) == Parity::Even || p == Parity::Odd;
            acc = if plus { acc.add(&diag) } else { acc.sub(&diag) };
        }
        Ok(acc)
    }

    /// `[X, Y] = XY − (−1)^{|X||Y|} YX`.
    pub fn graded_bracket(&self, o: &Self) -> Result<Self> {
        let p = self.require_parity("graded bracket")?;
        let q = o.require_parity("graded bracket")?;
        let xy = self.matmul(o)?;
        let yx = o.matmul(self)?;
        if p == Parity::Odd && q == Parity::Odd {
            xy.add(&yx)
        } else {
            xy.sub(&yx)
        }
    }

    pub fn diamond(&self) -> Self {
        self.map(|x| x.diamond())
    }

    /// Adjoint: entrywise diamond of the supertranspose.
    pub fn dagger(&self) -> Result<Self> {
        Ok(self.supertranspose()?.diamond())
    }

    /// True when every entry of `self − o` satisfies `is_zero`.
    pub fn equal_by(&self, o: &Self, is_zero: impl Fn(&T) -> bool) -> Result<bool> {
        self.same_shape(o)?;
        Ok(self
            .entries
            .iter()
            .zip(&o.entries)
            .all(|(x, y)| is_zero(&x.sub(y))))
    }

    /// Indices `(i, j)` and values of entries where `self − o` fails
    /// `is_zero`.
    pub fn mismatches(&self, o: &Self, is_zero: impl Fn(&T) -> bool) -> Result<Vec<(usize, usize, T)>> {
        self.same_shape(o)?;
        let n = self.ncols();
        Ok(self
            .entries
            .iter()
            .zip(&o.entries)
            .enumerate()
            .filter_map(|(k, (x, y))| {
                let d = x.sub(y);
                (!is_zero(&d)).then(|| (k / n, k % n, d))
            })
            .collect())
    }

    pub fn with_parity(mut self, parity: Option<Parity>) -> Result<Self> {
        let rows: Vec<Vec<T>> = (0..self.nrows()).map(|i| self.row(i).to_vec()).collect();
        self = SuperMatrix::from_rows(&self.table, self.rows, self.cols, parity, rows)?;
        Ok(self)
    }

    fn sub_block(&self, ri: &[usize], cj: &[usize]) -> Vec<Vec<T>> {
        ri.iter()
            .map(|&i| cj.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect()
    }
}

impl SuperMatrix<Element> {
    pub fn reduce(&self, r: &RewriteSystem) -> Self {
        self.map(|x| r.reduce(x))
    }

    /// Superdeterminant `det(A − B D⁻¹ C) · det(D)⁻¹` of an even square
    /// matrix, where `A` is the even-even block and `D` the odd-odd block.
    /// Products are reduced by `r` as they are formed.
    pub fn sdet(&self, r: &RewriteSystem) -> Result<Element> {
        if self.require_parity("superdeterminant")? != Parity::Even {
            return Err(Error::Contract("superdeterminant of an odd supermatrix".into()));
        }
        if self.rows != self.cols {
            return Err(Error::Shape("superdeterminant of a non-square supermatrix".into()));
        }
        let ev = self.rows.indices(Parity::Even);
        let od = self.rows.indices(Parity::Odd);
        let a = self.sub_block(&ev, &ev);
        let b = self.sub_block(&ev, &od);
        let c = self.sub_block(&od, &ev);
        let d = self.sub_block(&od, &od);
        let det_d = r.reduce(&det(&self.table, &d));
        let inv_det_d = graded_inverse(&det_d, r).map_err(|_| {
            Error::NotInvertible(format!("odd-odd block has determinant {det_d}"))
        })?;
        let adj_d = adjugate(&self.table, &d);
        let k = ev.len();
        let mut schur = a;
        for i in 0..k {
            for j in 0..k {
                let mut acc = Element::zero(&self.table);
                for (l, adj_row) in adj_d.iter().enumerate() {
                    for (m, adj) in adj_row.iter().enumerate() {
                        if b[i][l].is_zero() || adj.is_zero() || c[m][j].is_zero() {
                            continue;
                        }
                        acc = &acc + &(&(&b[i][l] * adj) * &c[m][j]);
                    }
                }
                let corr = r.reduce(&(&acc * &inv_det_d));
                schur[i][j] = r.reduce(&(&schur[i][j] - &corr));
            }
        }
        Ok(r.reduce(&(&det(&self.table, &schur) * &inv_det_d)))
    }

    /// Graded inverse of an even square matrix by adjugate over the
    /// determinant. Entries of the result are reduced by `r`.
    pub fn inverse_even(&self, r: &RewriteSystem) -> Result<Self> {
        if self.parity != Some(Parity::Even) || self.rows != self.cols {
            return Err(Error::Contract("inverse_even needs an even square matrix".into()));
        }
        let n = self.nrows();
        let grid: Vec<Vec<Element>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        if self.rows.odd > 0 {
            return Err(Error::Contract(
                "adjugate inversion needs commuting entries (no odd indices)".into(),
            ));
        }
        let inv_det = graded_inverse(&r.reduce(&det(&self.table, &grid)), r)?;
        let adj = adjugate(&self.table, &grid);
        SuperMatrix::from_fn(&self.table, self.rows, self.cols, Some(Parity::Even), |i, j| {
            r.reduce(&(&adj[i][j] * &inv_det))
        })
    }

    /// Writes `target` in the span of constant `basis` matrices.
    ///
    /// Returns the coefficients and the residual `target − Σ cₖ Bₖ`; the
    /// caller decides what counts as zero for the residual. The basis must be
    /// linearly independent.
    pub fn decompose<T: Graded>(basis: &[SuperMatrix<Element>], target: &SuperMatrix<T>) -> Result<(Vec<T>, SuperMatrix<T>)> {
        let k = basis.len();
        let e = target.nrows() * target.ncols();
        let mut grid: Vec<Vec<Gaussian>> = vec![vec![Gaussian::zero(); k + e]; e];
        for (col, b) in basis.iter().enumerate() {
            if b.rows != target.rows || b.cols != target.cols {
                return Err(Error::Shape("basis and target shapes differ".into()));
            }
            for (row, x) in b.entries.iter().enumerate() {
                grid[row][col] = x
                    .as_constant()
                    .and_then(|c| c.as_gaussian())
                    .ok_or_else(|| Error::Contract("basis matrices must be Gaussian constants".into()))?;
            }
        }
        for (row, line) in grid.iter_mut().enumerate() {
            line[k + row] = Gaussian::one();
        }
        let pivots = rref(&mut grid, k);
        if pivots.len() != k {
            return Err(Error::Contract("basis is linearly dependent".into()));
        }
        let table = target.table();
        let mut coeffs = Vec::with_capacity(k);
        for (r, _) in pivots.iter().enumerate() {
            let mut acc = T::zero(table);
            for (j, t) in target.entries.iter().enumerate() {
                let w = grid[r][k + j];
                if !w.is_zero() && !t.is_zero() {
                    acc = acc.add(&t.scale(&Coeff::from(w)));
                }
            }
            coeffs.push(acc);
        }
        let mut residual = target.clone();
        for (c, b) in coeffs.iter().zip(basis) {
            for (x, y) in residual.entries.iter_mut().zip(&b.entries) {
                if let Some(w) = y.as_constant() {
                    if !w.is_zero() {
                        *x = x.sub(&c.scale(&w));
                    }
                }
            }
        }
        Ok((coeffs, residual))
    }
}

/// Gauss–Jordan elimination on the first `k` columns; returns pivot columns.
fn rref(grid: &mut [Vec<Gaussian>], k: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..grid.len()).find(|&r| !grid[r][col].is_zero()) else {
            continue;
        };
        grid.swap(row, p);
        let inv = grid[row][col].inv().expect("nonzero pivot");
        for x in grid[row].iter_mut() {
            *x = *x * inv;
        }
        for r in 0..grid.len() {
            if r != row && !grid[r][col].is_zero() {
                let f = grid[r][col];
                let pivot_row = grid[row].clone();
                for (x, y) in grid[r].iter_mut().zip(pivot_row) {
                    *x = *x - f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Determinant of a square grid of pairwise commuting entries by cofactor
/// expansion along the first row.
pub fn det(table: &Arc<GeneratorTable>, m: &[Vec<Element>]) -> Element {
    let n = m.len();
    match n {
        0 => Element::one(table),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = Element::zero(table);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor = minor(m, 0, j);
                let term = &m[0][j] * &det(table, &minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn minor(m: &[Vec<Element>], i: usize, j: usize) -> Vec<Vec<Element>> {
    m.iter()
        .enumerate()
        .filter(|&(r, _)| r != i)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(c, _)| c != j)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

fn adjugate(table: &Arc<GeneratorTable>, m: &[Vec<Element>]) -> Vec<Vec<Element>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![Element::one(table)]];
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = det(table, &minor(m, j, i));
                    if (i + j) % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .collect()
        })
        .collect()
}

/// Inverse of an even element whose reduced body is a nonzero constant:
/// writing `u = c(1 + ν)` with `ν` nilpotent, `u⁻¹ = c⁻¹ Σ (−ν)^k`.
pub fn graded_inverse(u: &Element, r: &RewriteSystem) -> Result<Element> {
    let u = r.reduce(u);
    let c = r
        .reduce(&u.body())
        .as_constant()
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::NotInvertible(format!("body of {u} is not a nonzero constant")))?;
    let c_inv = c
        .inv()
        .ok_or_else(|| Error::NotInvertible(format!("constant {c} has no exact inverse")))?;
    let table = u.table().clone();
    let one = Element::one(&table);
    let nu = r.reduce(&(&u.scale_coeff(&c_inv) - &one));
    let odd_count = table
        .generators()
        .iter()
        .filter(|g| g.parity == Parity::Odd)
        .count();
    let mut term = one.clone();
    let mut acc = one;
    for _ in 0..=odd_count {
        term = r.reduce(&-(&term * &nu));
        if term.is_zero() {
            return Ok(acc.scale_coeff(&c_inv));
        }
        acc = &acc + &term;
    }
    Err(Error::NotInvertible(format!(
        "{u}: the soul series does not terminate"
    )))
}

impl<T: Graded> fmt::Display for SuperMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows() {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[ {} ]", cells.join(" ; "))?;
        }
        Ok(())
    }
}

impl<T: Graded> fmt::Debug for SuperMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperMatrix({:?} × {:?}, {:?})\n{}", self.rows, self.cols, self.parity, self)
    }
}
