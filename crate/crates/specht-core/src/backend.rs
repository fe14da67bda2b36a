//! Module backends for the lattice engine: a dense one driven by explicit
//! generator matrices, and a tabloid-coordinate one for 2-part shapes whose
//! Specht dimension is too large for dense generator matrices (permutations
//! act there by coordinate permutation).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::f2::{F2Matrix, F2Vector, PivotTable, Subspace};
use crate::partition::{dim_specht, Partition};
use crate::rep::RepModule;
use crate::tableau::{standard_tableaux, Tableau};
use crate::{err, Result};

pub trait ModuleBackend {
    fn n(&self) -> usize;
    /// dimension of the coordinate space the module lives in
    fn ambient(&self) -> usize;
    fn label(&self) -> String;
    /// the Specht module inside the ambient space
    fn module(&self) -> &Subspace;
    /// action of the adjacent transposition s_{i+1} = (i+1, i+2), 0 ≤ i < n−1
    fn apply_adjacent(&self, i: usize, v: &F2Vector) -> F2Vector;

    fn dim(&self) -> usize {
        self.module().dim()
    }

    fn num_gens(&self) -> usize {
        self.n() - 1
    }

    /// (a b) for 1 ≤ a < b ≤ n via the adjacent factorization
    fn apply_transposition(&self, a: usize, b: usize, v: &F2Vector) -> F2Vector {
        assert!(1 <= a && a < b && b <= self.n());
        let mut w = v.clone();
        for i in (a..b).rev() {
            w = self.apply_adjacent(i - 1, &w);
        }
        for i in a + 1..b {
            w = self.apply_adjacent(i - 1, &w);
        }
        w
    }

    /// permutation given by 1-based images perm[j] = π(j+1); same
    /// selection-sort decomposition as `RepModule::apply_perm`
    fn apply_perm(&self, perm: &[usize], v: &F2Vector) -> F2Vector {
        assert_eq!(perm.len(), self.n());
        let mut p: Vec<usize> = perm.to_vec();
        let mut swaps = Vec::new();
        for target in 1..=self.n() {
            let pos = p.iter().position(|&x| x == target).unwrap();
            if pos != target - 1 {
                p.swap(pos, target - 1);
                swaps.push((p[pos], target));
            }
        }
        let mut w = v.clone();
        for &(a, b) in swaps.iter().rev() {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            w = self.apply_transposition(a, b, &w);
        }
        w
    }
}

/// Module given by explicit generator matrices; ambient = the module itself.
pub struct DenseBackend {
    pub rep: RepModule,
    module: Subspace,
}

impl DenseBackend {
    pub fn new(rep: RepModule) -> Self {
        let module = Subspace::full(rep.dim);
        DenseBackend { rep, module }
    }
}

impl ModuleBackend for DenseBackend {
    fn n(&self) -> usize {
        self.rep.n
    }
    fn ambient(&self) -> usize {
        self.rep.dim
    }
    fn label(&self) -> String {
        self.rep.label.clone()
    }
    fn module(&self) -> &Subspace {
        &self.module
    }
    fn apply_adjacent(&self, i: usize, v: &F2Vector) -> F2Vector {
        self.rep.gens[i].matvec(v)
    }
}

/// S^(λ₁,λ₂) inside the tabloid space of M^λ. A tabloid is identified with
/// its second-row set, ranked in the combinatorial number system; the
/// symmetric group acts by permuting coordinates, so no generator matrices
/// are ever materialized.
pub struct TwoPartTabloidBackend {
    pub shape: Partition,
    n: usize,
    k: usize,
    binom: Vec<Vec<u64>>,
    /// gen_perms[i][r] = image of tabloid r under s_{i+1}
    gen_perms: Vec<Vec<u32>>,
    module: Subspace,
}

impl TwoPartTabloidBackend {
    pub fn new(shape: &Partition) -> Result<Self> {
        if !shape.is_two_part() || shape.rows() != 2 {
            return err("tabloid backend needs a genuine 2-part shape");
        }
        let n = shape.n();
        let k = shape.part(1);
        let mut binom = vec![vec![0u64; k + 2]; n + 1];
        for a in 0..=n {
            binom[a][0] = 1;
            for b in 1..=(k + 1).min(a) {
                binom[a][b] = binom[a - 1][b - 1] + if b <= a - 1 { binom[a - 1][b] } else { 0 };
            }
        }
        let ambient = binom[n][k] as usize;
        let rank_of = |subset: &[usize]| -> usize {
            // subset: 0-based, strictly increasing
            subset
                .iter()
                .enumerate()
                .map(|(i, &s)| binom[s][i + 1] as usize)
                .sum()
        };
        let mut gen_perms = Vec::with_capacity(n - 1);
        let mut subset: Vec<usize> = (0..k).collect();
        let mut all_subsets = Vec::with_capacity(ambient);
        loop {
            all_subsets.push(subset.clone());
            if k == 0 {
                break;
            }
            let mut i = k;
            while i > 0 && subset[i - 1] == n - k + (i - 1) {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            subset[i - 1] += 1;
            for j in i..k {
                subset[j] = subset[j - 1] + 1;
            }
        }
        debug_assert_eq!(all_subsets.len(), ambient);
        for g in 0..n - 1 {
            // swap 0-based points g, g+1
            let mut perm = vec![0u32; ambient];
            for s in &all_subsets {
                let r = rank_of(s);
                let has_a = s.binary_search(&g).is_ok();
                let has_b = s.binary_search(&(g + 1)).is_ok();
                if has_a == has_b {
                    perm[r] = r as u32;
                } else {
                    let mut t: Vec<usize> =
                        s.iter().map(|&x| if x == g { g + 1 } else if x == g + 1 { g } else { x }).collect();
                    t.sort_unstable();
                    perm[r] = rank_of(&t) as u32;
                }
            }
            gen_perms.push(perm);
        }
        // module basis: standard polytabloids expanded over their column
        // groups (each column has ≤ 2 entries, so 2^k terms)
        let mut table = PivotTable::new(ambient);
        for t in standard_tableaux(shape) {
            let row0 = &t.rows()[0];
            let row1 = &t.rows()[1];
            let mut v = F2Vector::zero(ambient);
            for mask in 0u32..(1 << k) {
                let mut sub: Vec<usize> = (0..k)
                    .map(|j| if mask >> j & 1 == 1 { row0[j] - 1 } else { row1[j] - 1 })
                    .collect();
                sub.sort_unstable();
                v.flip(rank_of(&sub));
            }
            table.insert(v);
        }
        let module = Subspace::from_table(&table);
        if module.dim() as u128 != dim_specht(shape)? {
            return err("tabloid backend: module dimension mismatch");
        }
        Ok(TwoPartTabloidBackend {
            shape: shape.clone(),
            n,
            k,
            binom,
            gen_perms,
            module,
        })
    }

    /// Expansion of the polytabloid e_t over the column group of a 2-part
    /// tableau t, in ambient tabloid coordinates.
    pub fn polytabloid(&self, t: &Tableau) -> F2Vector {
        let row0 = &t.rows()[0];
        let row1 = &t.rows()[1];
        let mut v = F2Vector::zero(self.ambient());
        for mask in 0u32..(1 << self.k) {
            let mut sub: Vec<usize> = (0..self.k)
                .map(|j| if mask >> j & 1 == 1 { row0[j] - 1 } else { row1[j] - 1 })
                .collect();
            sub.sort_unstable();
            v.flip(self.rank_of(&sub));
        }
        v
    }

    /// Change of coordinates from the standard polytabloid basis (column-word
    /// order, as used by the dense representation matrices) to the ambient
    /// tabloid coordinates.
    pub fn standard_to_tabloid(&self) -> F2Matrix {
        let ts = standard_tableaux(&self.shape);
        let mut m = F2Matrix::zero(ts.len(), self.ambient());
        for (i, t) in ts.iter().enumerate() {
            let row = self.polytabloid(t);
            for j in 0..self.ambient() {
                if row.get(j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    fn rank_of(&self, subset: &[usize]) -> usize {
        subset
            .iter()
            .enumerate()
            .map(|(i, &s)| self.binom[s][i + 1] as usize)
            .sum()
    }

    fn unrank(&self, mut r: usize) -> Vec<usize> {
        let mut out = vec![0usize; self.k];
        for i in (0..self.k).rev() {
            // largest s with C(s, i+1) ≤ r
            let mut s = i;
            while s + 1 < self.n && self.binom[s + 1][i + 1] as usize <= r {
                s += 1;
            }
            out[i] = s;
            r -= self.binom[s][i + 1] as usize;
        }
        out
    }
}

impl ModuleBackend for TwoPartTabloidBackend {
    fn n(&self) -> usize {
        self.n
    }
    fn ambient(&self) -> usize {
        self.gen_perms.first().map(|p| p.len()).unwrap_or(1)
    }
    fn label(&self) -> String {
        let mut s = String::from("tabloid S^(");
        s.push_str(&alloc::format!("{}", self.shape.display()));
        s.push(')');
        s
    }
    fn module(&self) -> &Subspace {
        &self.module
    }
    fn apply_adjacent(&self, i: usize, v: &F2Vector) -> F2Vector {
        let perm = &self.gen_perms[i];
        let mut out = F2Vector::zero(v.len());
        for b in v.iter_ones() {
            out.flip(perm[b] as usize);
        }
        out
    }
    fn apply_perm(&self, perm: &[usize], v: &F2Vector) -> F2Vector {
        assert_eq!(perm.len(), self.n);
        let mut out = F2Vector::zero(v.len());
        for b in v.iter_ones() {
            let sub = self.unrank(b);
            let mut t: Vec<usize> = sub.iter().map(|&x| perm[x] - 1).collect();
            t.sort_unstable();
            out.flip(self.rank_of(&t));
        }
        out
    }
}
