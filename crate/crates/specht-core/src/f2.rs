//! Bit-packed exact linear algebra over GF(2).
//!
//! Everything downstream (module construction, Hom solving, lattice BFS) rides
//! on these types, so the layout is chosen for word-wide XOR throughput:
//! row-major packing into 64-bit words, elimination by whole-row XOR, and an
//! incremental pivot table that lets tall redundant systems terminate early.

use alloc::vec;
use alloc::vec::Vec;

#[inline]
pub fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zero(len: usize) -> Self {
        F2Vector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zero(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(len: usize, bits: &[usize]) -> Self {
        let mut v = Self::zero(len);
        for &b in bits {
            v.set(b, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] >> (i & 63) & 1 != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let m = 1u64 << (i & 63);
        if b {
            self.words[i >> 6] |= m;
        } else {
            self.words[i >> 6] &= !m;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &F2Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a ^= *b;
        }
    }

    #[inline]
    pub fn xor_assign_words(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other.iter()) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit, if any.
    pub fn leading(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some((i << 6) + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parity of the bitwise AND with `other` (GF(2) dot product).
    pub fn dot(&self, other: &F2Vector) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(other.words.iter()) {
            acc ^= a & b;
        }
        acc.count_ones() & 1 != 0
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some((wi << 6) + b)
                }
            })
        })
    }

    /// Concatenate two vectors (used by the Zassenhaus double stack).
    pub fn concat(&self, other: &F2Vector) -> F2Vector {
        let mut v = F2Vector::zero(self.len + other.len);
        for i in self.iter_ones() {
            v.set(i, true);
        }
        for i in other.iter_ones() {
            v.set(self.len + i, true);
        }
        v
    }

    pub fn slice(&self, start: usize, len: usize) -> F2Vector {
        let mut v = F2Vector::zero(len);
        for (wi, word) in v.words.iter_mut().enumerate() {
            let bit = start + (wi << 6);
            let lo = self.words.get(bit >> 6).copied().unwrap_or(0);
            let sh = (bit & 63) as u32;
            let mut w = lo >> sh;
            if sh != 0 {
                w |= self.words.get((bit >> 6) + 1).copied().unwrap_or(0) << (64 - sh);
            }
            *word = w;
        }
        let tail = len & 63;
        if tail != 0 {
            let last = v.words.len() - 1;
            v.words[last] &= (1u64 << tail) - 1;
        }
        v
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let wpr = words_for(cols);
        F2Matrix {
            rows,
            cols,
            wpr,
            data: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[F2Vector]) -> Self {
        let mut m = Self::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            debug_assert_eq!(r.len(), cols);
            m.row_mut(i).copy_from_slice(r.words());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    pub fn row_vec(&self, i: usize) -> F2Vector {
        F2Vector {
            len: self.cols,
            words: self.row(i).to_vec(),
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.row(r)[c >> 6] >> (c & 63) & 1 != 0
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, b: bool) {
        let wpr = self.wpr;
        let m = 1u64 << (c & 63);
        let w = &mut self.data[r * wpr + (c >> 6)];
        if b {
            *w |= m;
        } else {
            *w &= !m;
        }
    }

    pub fn xor_row_into(&mut self, src: usize, dst: usize) {
        let wpr = self.wpr;
        let (s, d) = (src * wpr, dst * wpr);
        for k in 0..wpr {
            let w = self.data[s + k];
            self.data[d + k] ^= w;
        }
    }

    /// Matrix-vector product M·v (v as a column vector).
    pub fn matvec(&self, v: &F2Vector) -> F2Vector {
        debug_assert_eq!(v.len(), self.cols);
        let mut out = F2Vector::zero(self.rows);
        for i in 0..self.rows {
            let mut acc = 0u64;
            for (a, b) in self.row(i).iter().zip(v.words().iter()) {
                acc ^= a & b;
            }
            if acc.count_ones() & 1 != 0 {
                out.set(i, true);
            }
        }
        out
    }

    /// Matrix product, by the row-combination method: row i of A·B is the XOR
    /// of the rows of B selected by the set bits of row i of A.
    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = F2Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![0u64; out.wpr];
            for j in self.row_vec(i).iter_ones() {
                for (a, b) in acc.iter_mut().zip(other.row(j).iter()) {
                    *a ^= *b;
                }
            }
            out.row_mut(i).copy_from_slice(&acc);
        }
        out
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut out = F2Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_vec(i).iter_ones() {
                out.set(j, i, true);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut t = PivotTable::new(self.cols);
        for i in 0..self.rows {
            t.insert(self.row_vec(i));
        }
        t.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }
}

/// Incremental RREF pivot table. Rows are folded one at a time; the table is
/// kept fully reduced (each pivot column has a single 1), so the row set at
/// any moment is the canonical RREF basis of everything folded so far.
#[derive(Clone, Debug)]
pub struct PivotTable {
    width: usize,
    rows: Vec<F2Vector>,
    /// companions[i] tracks the combination of inserted rows forming rows[i]
    /// (present only when transform recording was requested).
    companions: Option<Vec<F2Vector>>,
    comp_width: usize,
    pivot_of: Vec<u32>, // column -> row index + 1, 0 = none
}

impl PivotTable {
    pub fn new(width: usize) -> Self {
        PivotTable {
            width,
            rows: Vec::new(),
            companions: None,
            comp_width: 0,
            pivot_of: vec![0; width],
        }
    }

    pub fn with_transform(width: usize, comp_width: usize) -> Self {
        let mut t = Self::new(width);
        t.companions = Some(Vec::new());
        t.comp_width = comp_width;
        t
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn has_pivot(&self, col: usize) -> bool {
        self.pivot_of[col] != 0
    }

    /// Fully reduce `v` against the table (walking set bits in increasing
    /// order is safe because each table row leads with its pivot).
    pub fn reduce(&self, v: &mut F2Vector) {
        let mut wi = 0;
        let nw = v.words().len();
        while wi < nw {
            let w = v.words()[wi];
            if w == 0 {
                wi += 1;
                continue;
            }
            let bit = (wi << 6) + w.trailing_zeros() as usize;
            if bit >= self.width {
                break;
            }
            let p = self.pivot_of[bit];
            if p != 0 {
                v.xor_assign(&self.rows[(p - 1) as usize]);
                // the row's leading bit was `bit`, so the word may now be zero
                // or have its next set bit further right; re-examine it.
            } else {
                // clear just this bit temporarily to find the next candidate?
                // cheaper: scan the remaining bits of this word for a pivot hit
                let mut rest = w & !((1u64 << (bit & 63)) | ((1u64 << (bit & 63)) - 1));
                let mut hit = false;
                while rest != 0 {
                    let b = (wi << 6) + rest.trailing_zeros() as usize;
                    if b >= self.width {
                        break;
                    }
                    if self.pivot_of[b] != 0 {
                        v.xor_assign(&self.rows[(self.pivot_of[b] - 1) as usize]);
                        hit = true;
                        break;
                    }
                    rest &= rest - 1;
                }
                if !hit {
                    wi += 1;
                }
            }
        }
    }

    /// Fold a row in; returns the new row's pivot column if it was independent.
    pub fn insert(&mut self, mut v: F2Vector) -> Option<usize> {
        debug_assert_eq!(v.len(), self.width);
        self.reduce(&mut v);
        self.insert_reduced(v)
    }

    pub fn insert_reduced(&mut self, v: F2Vector) -> Option<usize> {
        let piv = v.leading()?;
        // back-substitute the new pivot out of existing rows
        let idx = self.rows.len();
        for r in self.rows.iter_mut() {
            if r.get(piv) {
                r.xor_assign(&v);
            }
        }
        self.rows.push(v);
        self.pivot_of[piv] = (idx + 1) as u32;
        Some(piv)
    }

    /// Fold a row with a companion (for transform / left-kernel tracking).
    /// Returns the companion of the residual when the row was dependent.
    pub fn insert_tracked(&mut self, mut v: F2Vector, mut comp: F2Vector) -> Option<F2Vector> {
        self.reduce_tracked_pair(&mut v, &mut comp);
        match v.leading() {
            None => Some(comp),
            Some(piv) => {
                let vclone = v.clone();
                let cclone = comp.clone();
                let comps = self.companions.as_mut().expect("transform not recorded");
                for (r, c) in self.rows.iter_mut().zip(comps.iter_mut()) {
                    if r.get(piv) {
                        r.xor_assign(&vclone);
                        c.xor_assign(&cclone);
                    }
                }
                let idx = self.rows.len();
                self.rows.push(v);
                self.companions.as_mut().unwrap().push(comp);
                self.pivot_of[piv] = (idx + 1) as u32;
                None
            }
        }
    }

    fn reduce_tracked_pair(&self, v: &mut F2Vector, comp: &mut F2Vector) {
        let comps = self.companions.as_ref().expect("transform not recorded");
        let mut wi = 0;
        let nw = v.words().len();
        while wi < nw {
            let w = v.words()[wi];
            if w == 0 {
                wi += 1;
                continue;
            }
            let bit = (wi << 6) + w.trailing_zeros() as usize;
            if bit >= self.width {
                break;
            }
            let p = self.pivot_of[bit];
            if p != 0 {
                let r = (p - 1) as usize;
                v.xor_assign(&self.rows[r]);
                comp.xor_assign(&comps[r]);
            } else {
                let mut rest = w & !(((1u64 << (bit & 63)) - 1) | (1u64 << (bit & 63)));
                let mut hit = false;
                while rest != 0 {
                    let b = (wi << 6) + rest.trailing_zeros() as usize;
                    if b >= self.width {
                        break;
                    }
                    if self.pivot_of[b] != 0 {
                        let r = (self.pivot_of[b] - 1) as usize;
                        v.xor_assign(&self.rows[r]);
                        comp.xor_assign(&comps[r]);
                        hit = true;
                        break;
                    }
                    rest &= rest - 1;
                }
                if !hit {
                    wi += 1;
                }
            }
        }
    }

    /// Rows sorted by pivot column — the canonical RREF.
    pub fn rref_rows(&self) -> Vec<F2Vector> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.rows[i].leading().unwrap());
        idx.into_iter().map(|i| self.rows[i].clone()).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.width).filter(|&c| self.pivot_of[c] != 0).collect();
        p.sort_unstable();
        p
    }
}

/// Plain RREF of a matrix: (reduced matrix, rank, pivot columns).
pub fn rref(m: &F2Matrix) -> (F2Matrix, usize, Vec<usize>) {
    let mut t = PivotTable::new(m.cols());
    for i in 0..m.rows() {
        t.insert(m.row_vec(i));
    }
    let rows = t.rref_rows();
    let rank = rows.len();
    (F2Matrix::from_rows(m.cols(), &rows), rank, t.pivots())
}

/// RREF with a recorded transform E such that E·M = R (E square, invertible).
pub fn rref_with_transform(m: &F2Matrix) -> (F2Matrix, F2Matrix, usize) {
    let n = m.rows();
    let mut t = PivotTable::with_transform(m.cols(), n);
    let mut extra: Vec<(F2Vector, F2Vector)> = Vec::new();
    for i in 0..n {
        let mut v = m.row_vec(i);
        let mut c = F2Vector::unit(n, i);
        t.reduce_tracked_pair(&mut v, &mut c);
        if v.is_zero() {
            extra.push((v, c));
        } else {
            t.insert_tracked(m.row_vec(i), F2Vector::unit(n, i));
        }
    }
    let mut idx: Vec<usize> = (0..t.rows.len()).collect();
    idx.sort_by_key(|&i| t.rows[i].leading().unwrap());
    let comps = t.companions.as_ref().unwrap();
    let mut rrows: Vec<F2Vector> = idx.iter().map(|&i| t.rows[i].clone()).collect();
    let mut erows: Vec<F2Vector> = idx.iter().map(|&i| comps[i].clone()).collect();
    let rank = rrows.len();
    for (v, c) in extra {
        rrows.push(v);
        erows.push(c);
    }
    while rrows.len() < n {
        rrows.push(F2Vector::zero(m.cols()));
        erows.push(F2Vector::zero(n));
    }
    (
        F2Matrix::from_rows(m.cols(), &rrows),
        F2Matrix::from_rows(n, &erows),
        rank,
    )
}

/// Right kernel {v : M v = 0} as a canonical subspace.
pub fn kernel(m: &F2Matrix) -> Subspace {
    let mut t = PivotTable::new(m.cols());
    for i in 0..m.rows() {
        t.insert(m.row_vec(i));
    }
    kernel_of_table(&t)
}

pub fn kernel_of_table(t: &PivotTable) -> Subspace {
    let rows = t.rref_rows();
    let pivots = t.pivots();
    let cols = t.width();
    let mut is_piv = vec![false; cols];
    for &p in &pivots {
        is_piv[p] = true;
    }
    let mut basis = Vec::new();
    for j in 0..cols {
        if is_piv[j] {
            continue;
        }
        let mut v = F2Vector::unit(cols, j);
        for (r, row) in rows.iter().enumerate() {
            if row.get(j) {
                v.set(pivots[r], true);
            }
        }
        basis.push(v);
    }
    Subspace::from_rows(cols, basis)
}

/// A subspace in canonical form: RREF basis + pivot list. Two subspaces are
/// equal iff their packed bases are bit-identical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<F2Vector>, // RREF, sorted by pivot
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_rows(ambient, (0..ambient).map(|i| F2Vector::unit(ambient, i)).collect())
    }

    pub fn from_rows(ambient: usize, rows: Vec<F2Vector>) -> Self {
        let mut t = PivotTable::new(ambient);
        for r in rows {
            t.insert(r);
        }
        Self::from_table(&t)
    }

    pub fn from_table(t: &PivotTable) -> Self {
        Subspace {
            ambient: t.width(),
            basis: t.rref_rows(),
            pivots: t.pivots(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[F2Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn to_table(&self) -> PivotTable {
        let mut t = PivotTable::new(self.ambient);
        for r in &self.basis {
            t.insert(r.clone());
        }
        t
    }

    pub fn member(&self, v: &F2Vector) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let mut r = v.clone();
        let t = self.to_table();
        t.reduce(&mut r);
        r.is_zero()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        if other.dim() > self.dim() {
            return false;
        }
        let t = self.to_table();
        other.basis.iter().all(|v| {
            let mut r = v.clone();
            t.reduce(&mut r);
            r.is_zero()
        })
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut t = self.to_table();
        for r in &other.basis {
            t.insert(r.clone());
        }
        Subspace::from_table(&t)
    }

    /// Zassenhaus: RREF the double stack [U|U; V|0]; rows with zero left
    /// block carry the intersection in the right block.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let n = self.ambient;
        let mut t = PivotTable::new(2 * n);
        for r in &self.basis {
            t.insert(r.concat(r));
        }
        let z = F2Vector::zero(n);
        for r in &other.basis {
            t.insert(r.concat(&z));
        }
        let mut inter = Vec::new();
        for row in t.rref_rows() {
            let left = row.slice(0, n);
            if left.is_zero() {
                inter.push(row.slice(n, n));
            }
        }
        Subspace::from_rows(n, inter)
    }

    /// Canonical packed form, usable as an ordered-map key for node dedup.
    pub fn canonical_key(&self) -> Vec<u64> {
        let mut key = Vec::with_capacity(2 + self.basis.len() * words_for(self.ambient));
        key.push(self.ambient as u64);
        key.push(self.basis.len() as u64);
        for r in &self.basis {
            key.extend_from_slice(r.words());
        }
        key
    }

    pub fn quotient(&self) -> QuotientMap {
        let mut is_piv = vec![false; self.ambient];
        for &p in &self.pivots {
            is_piv[p] = true;
        }
        let free: Vec<usize> = (0..self.ambient).filter(|&c| !is_piv[c]).collect();
        QuotientMap {
            sub: self.clone(),
            free,
        }
    }
}

/// Projection onto the coordinate complement of a subspace's pivot columns,
/// with a lift satisfying project ∘ lift = identity.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    sub: Subspace,
    free: Vec<usize>,
}

impl QuotientMap {
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }

    pub fn project(&self, v: &F2Vector) -> F2Vector {
        let t = self.sub.to_table();
        let mut r = v.clone();
        t.reduce(&mut r);
        let mut out = F2Vector::zero(self.free.len());
        for (i, &c) in self.free.iter().enumerate() {
            if r.get(c) {
                out.set(i, true);
            }
        }
        out
    }

    pub fn lift(&self, v: &F2Vector) -> F2Vector {
        let mut out = F2Vector::zero(self.sub.ambient());
        for (i, &c) in self.free.iter().enumerate() {
            if v.get(i) {
                out.set(c, true);
            }
        }
        out
    }
}

/// Solve for all combinations of `rows` that sum to zero (the left kernel of
/// the stacked matrix). Returns combination vectors over the row index space.
/// This is the workhorse behind constraint refinement: rows come from applying
/// an operator to candidate vectors, and the returned combinations are the
/// candidates surviving the constraint.
pub fn left_kernel_combinations(width: usize, rows: &[F2Vector]) -> Vec<F2Vector> {
    let n = rows.len();
    let mut t = PivotTable::with_transform(width, n);
    let mut out = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if let Some(comp) = t.insert_tracked(r.clone(), F2Vector::unit(n, i)) {
            out.push(comp);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn splitmix(state: &mut u64) -> u64 {
        *state = state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = *state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    fn rand_matrix(state: &mut u64, rows: usize, cols: usize) -> F2Matrix {
        let mut m = F2Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if splitmix(state) & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = F2Matrix::identity(7);
        let (r, rank, _) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(rank, 7);
        let z = F2Matrix::zero(4, 6);
        let (r, rank, _) = rref(&z);
        assert!(r.is_zero());
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_is_fixpoint_and_transform_checks() {
        let mut st = 42u64;
        for _ in 0..10 {
            let m = rand_matrix(&mut st, 50, 50);
            let (r, e, _rank) = rref_with_transform(&m);
            assert_eq!(e.mul(&m), r, "E·M = R");
            let (r2, _, _) = rref(&r);
            let (r1, _, _) = rref(&m);
            // zero rows of r sort to the end in r; compare nonzero parts
            assert_eq!(r1, r2, "rref idempotent");
        }
    }

    #[test]
    fn kernel_identity_and_zero() {
        assert_eq!(kernel(&F2Matrix::identity(9)).dim(), 0);
        assert_eq!(kernel(&F2Matrix::zero(3, 9)).dim(), 9);
        let mut st = 7u64;
        for _ in 0..20 {
            let m = rand_matrix(&mut st, 17, 31);
            let k = kernel(&m);
            assert_eq!(k.dim(), 31 - m.rank());
            for v in k.basis() {
                assert!(m.matvec(v).is_zero());
            }
        }
    }

    #[test]
    fn subspace_canonical_under_change_of_basis() {
        let mut st = 99u64;
        for _ in 0..20 {
            let m = rand_matrix(&mut st, 10, 40);
            let u = Subspace::from_rows(40, (0..10).map(|i| m.row_vec(i)).collect());
            // random invertible recombination of the spanning set
            let mut rows: Vec<F2Vector> = (0..10).map(|i| m.row_vec(i)).collect();
            for _ in 0..50 {
                let i = (splitmix(&mut st) % 10) as usize;
                let j = (splitmix(&mut st) % 10) as usize;
                if i != j {
                    let rj = rows[j].clone();
                    rows[i].xor_assign(&rj);
                }
            }
            let v = Subspace::from_rows(40, rows);
            assert_eq!(u, v);
            assert_eq!(u.canonical_key(), v.canonical_key());
        }
    }

    #[test]
    fn sum_intersect_dim_formula() {
        let mut st = 1234u64;
        for _ in 0..20 {
            let a = rand_matrix(&mut st, 15, 64);
            let b = rand_matrix(&mut st, 15, 64);
            let u = Subspace::from_rows(64, (0..15).map(|i| a.row_vec(i)).collect());
            let v = Subspace::from_rows(64, (0..15).map(|i| b.row_vec(i)).collect());
            let s = u.sum(&v);
            let i = u.intersect(&v);
            assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
            assert_eq!(u.sum(&u), u);
            assert_eq!(u.intersect(&u), u);
            assert!(s.contains(&u) && s.contains(&v));
            assert!(u.contains(&i) && v.contains(&i));
            for r in u.basis() {
                assert!(u.member(r));
            }
        }
    }

    #[test]
    fn quotient_project_lift_identity() {
        let mut st = 5u64;
        let m = rand_matrix(&mut st, 8, 24);
        let u = Subspace::from_rows(24, (0..8).map(|i| m.row_vec(i)).collect());
        let q = u.quotient();
        assert_eq!(q.dim(), 24 - u.dim());
        for i in 0..q.dim() {
            let e = F2Vector::unit(q.dim(), i);
            assert_eq!(q.project(&q.lift(&e)), e);
        }
        for r in u.basis() {
            assert!(q.project(r).is_zero());
        }
    }

    #[test]
    fn mul_associativity_spot_check() {
        let mut st = 31337u64;
        for _ in 0..5 {
            let a = rand_matrix(&mut st, 20, 30);
            let b = rand_matrix(&mut st, 30, 25);
            let c = rand_matrix(&mut st, 25, 40);
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }

    #[test]
    fn left_kernel_combinations_sound() {
        let mut st = 77u64;
        let m = rand_matrix(&mut st, 30, 12); // tall: many dependencies
        let rows: Vec<F2Vector> = (0..30).map(|i| m.row_vec(i)).collect();
        let combos = left_kernel_combinations(12, &rows);
        assert_eq!(combos.len(), 30 - m.rank());
        for c in &combos {
            let mut acc = F2Vector::zero(12);
            for i in c.iter_ones() {
                acc.xor_assign(&rows[i]);
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn slice_and_concat_roundtrip() {
        let mut st = 404u64;
        for len in [1usize, 63, 64, 65, 130] {
            let mut v = F2Vector::zero(len);
            for i in 0..len {
                if splitmix(&mut st) & 1 == 1 {
                    v.set(i, true);
                }
            }
            let w = F2Vector::zero(37);
            let c = v.concat(&w);
            assert_eq!(c.slice(0, len), v);
            assert_eq!(c.slice(len, 37), w);
        }
    }
}
