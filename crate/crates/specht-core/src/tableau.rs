//! Young tableaux, tabloids, polytabloids and Garnir straightening.
//!
//! The standard basis of S^λ is ordered by column-reading word
//! (columns read top-to-bottom, left-to-right), lexicographically.
//! Everything here is characteristic-2: signs are dropped throughout.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::f2::F2Vector;
use crate::partition::Partition;
use crate::{err, Result};

/// A filling of the Young diagram of `shape` with 1..n, stored row-wise.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

/// A tabloid: the rows of a tableau as sets. Canonical — equal keys iff
/// equal tabloids.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TabloidKey {
    pub row_sets: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = shape.n();
        if rows.len() != shape.rows() {
            return err("row count does not match shape");
        }
        let mut seen = vec![false; n + 1];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.part(i) {
                return err(format!("row {i} has wrong length"));
            }
            for &e in row {
                if e == 0 || e > n || seen[e] {
                    return err(format!("entries are not a bijection onto 1..{n}"));
                }
                seen[e] = true;
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> usize {
        self.rows[r][c]
    }

    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows.iter().filter_map(|row| row.get(c).copied()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.shape.part(0)).map(|c| self.column(c)).collect()
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_column_standard(&self) -> bool {
        self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_standard() && self.is_column_standard()
    }

    /// Same tableau with each column sorted increasingly (e_t is unchanged
    /// at p = 2).
    pub fn sort_columns(&self) -> Tableau {
        let mut cols = self.columns();
        for c in &mut cols {
            c.sort_unstable();
        }
        let mut rows = vec![Vec::new(); self.shape.rows()];
        for col in &cols {
            for (r, &e) in col.iter().enumerate() {
                rows[r].push(e);
            }
        }
        Tableau { shape: self.shape.clone(), rows }
    }

    /// Apply a permutation given as images: entry e becomes perm[e−1].
    pub fn apply_perm(&self, perm: &[usize]) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&e| perm[e - 1]).collect())
            .collect();
        Tableau { shape: self.shape.clone(), rows }
    }

    /// Apply the transposition (a b).
    pub fn apply_transposition(&self, a: usize, b: usize) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| if e == a { b } else if e == b { a } else { e })
                    .collect()
            })
            .collect();
        Tableau { shape: self.shape.clone(), rows }
    }

    /// Columns read top-to-bottom, left-to-right.
    pub fn column_word(&self) -> Vec<usize> {
        self.columns().concat()
    }

    pub fn tabloid_key(&self) -> TabloidKey {
        let mut row_sets: Vec<Vec<usize>> = self.rows.clone();
        for r in &mut row_sets {
            r.sort_unstable();
        }
        TabloidKey { row_sets }
    }

    /// The columns as sorted sets; determines e_t at p = 2.
    pub fn column_key(&self) -> Vec<Vec<usize>> {
        let mut cols = self.columns();
        for c in &mut cols {
            c.sort_unstable();
        }
        cols
    }

    pub fn display(&self) -> String {
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| format!("{e}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        lines.join(" / ")
    }
}

/// All standard tableaux of shape λ, sorted by column word lexicographically.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    let n = lambda.n();
    let rows_template: Vec<usize> = lambda.parts().to_vec();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = rows_template.iter().map(|_| Vec::new()).collect();
    // place 1..n in order; entry k may go at the end of any row whose length
    // is currently less than the row above's — yields exactly the standard
    // tableaux
    fn place(
        k: usize,
        n: usize,
        lambda: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
        shape: &Partition,
    ) {
        if k > n {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for i in 0..rows.len() {
            let len = rows[i].len();
            if len < lambda[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(k);
                place(k + 1, n, lambda, rows, out, shape);
                rows[i].pop();
            }
        }
    }
    place(1, n, &rows_template, &mut rows, &mut out, lambda);
    out.sort_by_key(|t| t.column_word());
    out
}

/// The standard polytabloid basis of S^λ with index lookup and a
/// straightening memo.
pub struct StandardBasis {
    pub shape: Partition,
    pub tableaux: Vec<Tableau>,
    index: BTreeMap<Vec<Vec<usize>>, usize>,
    memo: BTreeMap<Vec<Vec<usize>>, F2Vector>,
}

impl StandardBasis {
    pub fn new(lambda: &Partition) -> Self {
        let tableaux = standard_tableaux(lambda);
        let index = tableaux
            .iter()
            .enumerate()
            .map(|(i, t)| (t.column_key(), i))
            .collect();
        StandardBasis {
            shape: lambda.clone(),
            tableaux,
            index,
            memo: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(&t.column_key()).copied()
    }

    /// Express e_t in the standard basis. `t` may be any tableau; columns
    /// are sorted first (harmless at p = 2).
    pub fn straighten(&mut self, t: &Tableau) -> Result<F2Vector> {
        if t.shape() != &self.shape {
            return err("tableau shape does not match basis");
        }
        let t = t.sort_columns();
        self.straighten_sorted(&t)
    }

    fn straighten_sorted(&mut self, t: &Tableau) -> Result<F2Vector> {
        let key = t.column_key();
        if let Some(&i) = self.index.get(&key) {
            return Ok(F2Vector::unit(self.dim(), i));
        }
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        // leftmost violated column pair, topmost row: cols[c][k] > cols[c+1][k]
        let cols = t.columns();
        let mut found = None;
        'scan: for c in 0..cols.len().saturating_sub(1) {
            for k in 0..cols[c + 1].len() {
                if cols[c][k] > cols[c + 1][k] {
                    found = Some((c, k));
                    break 'scan;
                }
            }
        }
        let (c, k) = match found {
            Some(f) => f,
            // row-standard + column-standard but not in the index: bug
            None => return err(format!("standard tableau missing from basis: {}", t.display())),
        };
        // Garnir: X = tail of column c from row k, Y = head of column c+1
        // through row k; |X| + |Y| exceeds the column length, so e_t is the
        // sum of the polytabloids from every other increasing redistribution
        // of X ∪ Y.
        let x: Vec<usize> = cols[c][k..].to_vec();
        let y: Vec<usize> = cols[c + 1][..=k].to_vec();
        let mut z: Vec<usize> = x.iter().chain(y.iter()).copied().collect();
        z.sort_unstable();
        let xlen = x.len();
        let mut acc = F2Vector::zero(self.dim());
        let mut chosen = vec![false; z.len()];
        // enumerate |X|-subsets of Z as the new column-c tail
        fn choose(
            z: &[usize],
            start: usize,
            need: usize,
            chosen: &mut Vec<bool>,
            sel: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if need == 0 {
                out.push(sel.clone());
                return;
            }
            if z.len() - start < need {
                return;
            }
            for i in start..z.len() {
                if chosen[i] {
                    continue;
                }
                chosen[i] = true;
                sel.push(z[i]);
                choose(z, i + 1, need - 1, chosen, sel, out);
                sel.pop();
                chosen[i] = false;
            }
        }
        let mut subsets = Vec::new();
        choose(&z, 0, xlen, &mut chosen, &mut Vec::new(), &mut subsets);
        for new_x in subsets {
            if new_x == x {
                continue; // the original term, moved to the left-hand side
            }
            let new_y: Vec<usize> = z.iter().filter(|e| !new_x.contains(e)).copied().collect();
            let mut rows = t.rows.clone();
            for (j, &e) in new_x.iter().enumerate() {
                rows[k + j][c] = e;
            }
            for (j, &e) in new_y.iter().enumerate() {
                rows[j][c + 1] = e;
            }
            let t2 = Tableau { shape: t.shape.clone(), rows }.sort_columns();
            let v = self.straighten_sorted(&t2)?;
            acc.xor_assign(&v);
        }
        self.memo.insert(key, acc.clone());
        Ok(acc)
    }
}

/// All tabloids of shape λ in a fixed order, with index lookup.
pub struct TabloidSpace {
    pub shape: Partition,
    pub keys: Vec<TabloidKey>,
    index: BTreeMap<TabloidKey, usize>,
}

impl TabloidSpace {
    pub fn new(lambda: &Partition) -> Self {
        let mut keys = Vec::new();
        let n = lambda.n();
        let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|_| Vec::new()).collect();
        fn assign(
            e: usize,
            n: usize,
            lambda: &Partition,
            rows: &mut Vec<Vec<usize>>,
            keys: &mut Vec<TabloidKey>,
        ) {
            if e > n {
                keys.push(TabloidKey { row_sets: rows.clone() });
                return;
            }
            for i in 0..rows.len() {
                if rows[i].len() < lambda.part(i) {
                    rows[i].push(e);
                    assign(e + 1, n, lambda, rows, keys);
                    rows[i].pop();
                }
            }
        }
        assign(1, n, lambda, &mut rows, &mut keys);
        keys.sort();
        keys.dedup();
        let index = keys.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        TabloidSpace { shape: lambda.clone(), keys, index }
    }

    pub fn dim(&self) -> usize {
        self.keys.len()
    }

    pub fn index_of(&self, k: &TabloidKey) -> Option<usize> {
        self.index.get(k).copied()
    }

    /// Brute-force e_t = Σ_{σ ∈ column group} {σ t} (signs vanish mod 2).
    pub fn polytabloid(&self, t: &Tableau) -> F2Vector {
        assert_eq!(t.shape(), &self.shape);
        let cols = t.columns();
        let mut v = F2Vector::zero(self.dim());
        // iterate over the column group as a product of per-column
        // permutations, applied as a relabelling of t's entries
        let n = t.n();
        let mut perm: Vec<usize> = (1..=n).collect();
        fn walk(
            cols: &[Vec<usize>],
            c: usize,
            perm: &mut Vec<usize>,
            t: &Tableau,
            space: &TabloidSpace,
            v: &mut F2Vector,
        ) {
            if c == cols.len() {
                let key = t.apply_perm(perm).tabloid_key();
                v.flip(space.index_of(&key).expect("tabloid of same shape"));
                return;
            }
            // all permutations of the entries within column c
            let col = &cols[c];
            fn perms_of(
                col: &[usize],
                i: usize,
                images: &mut Vec<usize>,
                used: &mut Vec<bool>,
                cols: &[Vec<usize>],
                c: usize,
                perm: &mut Vec<usize>,
                t: &Tableau,
                space: &TabloidSpace,
                v: &mut F2Vector,
            ) {
                if i == col.len() {
                    for (j, &src) in col.iter().enumerate() {
                        perm[src - 1] = images[j];
                    }
                    walk(cols, c + 1, perm, t, space, v);
                    for &src in col {
                        perm[src - 1] = src;
                    }
                    return;
                }
                for j in 0..col.len() {
                    if !used[j] {
                        used[j] = true;
                        images.push(col[j]);
                        perms_of(col, i + 1, images, used, cols, c, perm, t, space, v);
                        images.pop();
                        used[j] = false;
                    }
                }
            }
            perms_of(
                col,
                0,
                &mut Vec::new(),
                &mut vec![false; col.len()],
                cols,
                c,
                perm,
                t,
                space,
                v,
            );
        }
        walk(&cols, 0, &mut perm, t, self, &mut v);
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::left_kernel_combinations;
    use crate::partition::{dim_specht, partitions_of};

    fn part(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn standard_counts() {
        assert_eq!(standard_tableaux(&part("2,1")).len(), 2);
        assert_eq!(standard_tableaux(&part("2,2")).len(), 2);
        assert_eq!(standard_tableaux(&part("2,2,1")).len(), 5);
        assert_eq!(standard_tableaux(&part("3,2,1")).len(), 16);
        assert_eq!(standard_tableaux(&part("9,5")).len(), 1001);
        assert_eq!(standard_tableaux(&part("6,1^4")).len(), 126);
        for n in 1..=10usize {
            for l2 in 0..=n / 2 {
                let lam = Partition::two_part(n - l2, l2).unwrap();
                assert_eq!(
                    standard_tableaux(&lam).len() as u128,
                    dim_specht(&lam).unwrap()
                );
            }
            for r in 0..n {
                let lam = Partition::hook(n, r).unwrap();
                assert_eq!(
                    standard_tableaux(&lam).len() as u128,
                    dim_specht(&lam).unwrap()
                );
            }
        }
        // the order is strictly increasing in column word
        let ts = standard_tableaux(&part("3,2"));
        for w in ts.windows(2) {
            assert!(w[0].column_word() < w[1].column_word());
        }
    }

    #[test]
    fn tableau_basics() {
        let t = Tableau::new(part("3,2"), vec![vec![1, 3, 5], vec![2, 4]]).unwrap();
        assert!(t.is_standard());
        assert_eq!(t.column_word(), vec![1, 2, 3, 4, 5]);
        assert_eq!(t.tabloid_key().row_sets, vec![vec![1, 3, 5], vec![2, 4]]);
        let u = t.apply_transposition(1, 2);
        assert!(!u.is_column_standard());
        assert_eq!(u.sort_columns().column(0), vec![1, 2]);
        assert!(Tableau::new(part("3,2"), vec![vec![1, 3, 3], vec![2, 4]]).is_err());
        assert!(Tableau::new(part("3,2"), vec![vec![1, 3], vec![2, 4, 5]]).is_err());
    }

    #[test]
    fn straighten_standard_is_unit() {
        let lam = part("3,2,1");
        let mut basis = StandardBasis::new(&lam);
        for i in 0..basis.dim() {
            let t = basis.tableaux[i].clone();
            assert_eq!(basis.straighten(&t).unwrap(), F2Vector::unit(basis.dim(), i));
        }
    }

    #[test]
    fn straighten_2_2_relation() {
        // e_t for columns {2,3} | {1,4} = sum of both standard polytabloids
        let lam = part("2,2");
        let mut basis = StandardBasis::new(&lam);
        let t = Tableau::new(lam.clone(), vec![vec![2, 1], vec![3, 4]]).unwrap();
        let v = basis.straighten(&t).unwrap();
        assert_eq!(v.count_ones(), 2);
        // cross-check in tabloid space
        let space = TabloidSpace::new(&lam);
        assert_eq!(space.dim(), 6);
        let mut lhs = space.polytabloid(&t);
        for i in v.iter_ones() {
            lhs.xor_assign(&space.polytabloid(&basis.tableaux[i]));
        }
        assert!(lhs.is_zero());
    }

    #[test]
    fn straighten_agrees_with_tabloid_oracle() {
        // every column-standard filling, every shape with n ≤ 6; a couple of
        // bigger shapes with random-ish fillings
        for n in 2..=6usize {
            for lam in partitions_of(n) {
                let mut basis = StandardBasis::new(&lam);
                let space = TabloidSpace::new(&lam);
                let expanded: Vec<F2Vector> =
                    basis.tableaux.iter().map(|t| space.polytabloid(t)).collect();
                // standard polytabloids are independent
                let rank = crate::f2::F2Matrix::from_rows(space.dim(), &expanded).rank();
                assert_eq!(rank, basis.dim(), "λ={lam}");
                // all fillings via permutations of the superstandard one
                let base = basis.tableaux[0].clone();
                let mut perm: Vec<usize> = (1..=n).collect();
                permute(&mut perm, 0, &mut |p| {
                    let t = base.apply_perm(p).sort_columns();
                    let v = basis.straighten(&t).unwrap();
                    let mut diff = space.polytabloid(&t);
                    for i in v.iter_ones() {
                        diff.xor_assign(&expanded[i]);
                    }
                    assert!(diff.is_zero(), "λ={lam} t={}", t.display());
                });
            }
        }
        fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
            if k == p.len() {
                f(p);
                return;
            }
            for i in k..p.len() {
                p.swap(k, i);
                permute(p, k + 1, f);
                p.swap(k, i);
            }
        }
    }

    #[test]
    fn straighten_agrees_on_larger_shapes() {
        // spot-check n = 7 shapes with a pseudorandom sample of fillings
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for lam in [part("4,2,1"), part("3,2,2"), part("3,3,1"), part("4,1,1,1")] {
            let n = lam.n();
            let mut basis = StandardBasis::new(&lam);
            let space = TabloidSpace::new(&lam);
            let expanded: Vec<F2Vector> =
                basis.tableaux.iter().map(|t| space.polytabloid(t)).collect();
            let base = basis.tableaux[0].clone();
            for _ in 0..20 {
                let mut perm: Vec<usize> = (1..=n).collect();
                for i in (1..n).rev() {
                    perm.swap(i, (rng() % (i as u64 + 1)) as usize);
                }
                let t = base.apply_perm(&perm).sort_columns();
                let v = basis.straighten(&t).unwrap();
                let mut diff = space.polytabloid(&t);
                for i in v.iter_ones() {
                    diff.xor_assign(&expanded[i]);
                }
                assert!(diff.is_zero(), "λ={lam} t={}", t.display());
            }
        }
    }

    #[test]
    fn garnir_vanishing_in_tabloid_space() {
        // the defining relation: for a tableau with a column violation, the
        // full increasing-fill sum (including the original) expands to zero
        let lam = part("2,2");
        let space = TabloidSpace::new(&lam);
        let t = Tableau::new(lam.clone(), vec![vec![2, 1], vec![3, 4]]).unwrap();
        // Z = {2,3} ∪ {1} at violation (c=0,k=0)? instead check globally:
        // e_t + straightened expansion = 0 was already verified; here check
        // independence machinery: left kernel of expanded standard basis is 0
        let mut basis = StandardBasis::new(&lam);
        let rows: Vec<F2Vector> = basis
            .tableaux
            .iter()
            .map(|u| space.polytabloid(u))
            .collect();
        assert!(left_kernel_combinations(space.dim(), &rows).is_empty());
        let _ = basis.straighten(&t).unwrap();
    }

    #[test]
    fn tabloid_space_sizes() {
        assert_eq!(TabloidSpace::new(&part("2,2")).dim(), 6);
        assert_eq!(TabloidSpace::new(&part("4,2")).dim(), 15);
        assert_eq!(TabloidSpace::new(&part("3,1,1")).dim(), 20);
        let space = TabloidSpace::new(&part("3,2"));
        for (i, k) in space.keys.iter().enumerate() {
            assert_eq!(space.index_of(k), Some(i));
        }
    }
}
