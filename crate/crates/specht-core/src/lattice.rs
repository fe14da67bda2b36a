//! Full submodule lattices by breadth-first socle growth. Simple submodules
//! of each quotient are found by solving the cyclic presentation of the
//! candidate Specht module against the quotient (column relations, then
//! Garnir relations), so no generator matrices for the candidates are needed.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::backend::ModuleBackend;
use crate::f2::{left_kernel_combinations, F2Vector, PivotTable, Subspace};
use crate::partition::{is_p_regular, same_block, Partition};
use crate::twopart::{dim_simple_2part, profile, PredictedLattice};
use crate::{err, Result};

/// A group-algebra element acting on a backend.
#[derive(Clone, Debug)]
pub enum PermOp {
    /// 1 + (a b)
    PlusTransposition(usize, usize),
    /// sum of explicit permutations (1-based images)
    Sum(Vec<Vec<usize>>),
}

impl PermOp {
    pub fn apply<B: ModuleBackend + ?Sized>(&self, m: &B, v: &F2Vector) -> F2Vector {
        match self {
            PermOp::PlusTransposition(a, b) => {
                let mut out = v.clone();
                out.xor_assign(&m.apply_transposition(*a, *b, v));
                out
            }
            PermOp::Sum(perms) => {
                let mut out = F2Vector::zero(v.len());
                for p in perms {
                    out.xor_assign(&m.apply_perm(p, v));
                }
                out
            }
        }
    }
}

/// Garnir operator for entry sets X, Y of t₀ (adjacent columns): the sum over
/// the increasing-fill transversal, including the identity term.
fn garnir_op(x: &[usize], y: &[usize], n: usize) -> PermOp {
    let mut z: Vec<usize> = x.iter().chain(y.iter()).copied().collect();
    z.sort_unstable();
    let k = x.len();
    let mut perms = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let w: Vec<usize> = idx.iter().map(|&i| z[i]).collect();
        let rest: Vec<usize> = z.iter().copied().filter(|e| !w.contains(e)).collect();
        let mut perm: Vec<usize> = (1..=n).collect();
        for (j, &e) in x.iter().enumerate() {
            perm[e - 1] = w[j];
        }
        for (j, &e) in y.iter().enumerate() {
            perm[e - 1] = rest[j];
        }
        perms.push(perm);
        let mut i = k;
        while i > 0 && idx[i - 1] == z.len() - k + (i - 1) {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    PermOp::Sum(perms)
}

/// The cyclic presentation of S^ν (ν a 2-part shape of n) on the generator
/// e_{t₀}, where t₀ has columns (2i−1, 2i) for i ≤ ν₂: the column relations
/// (shared prefix across candidates) and the Garnir relations.
pub fn specht_relations(nu: &Partition, n: usize) -> Result<(Vec<PermOp>, Vec<PermOp>)> {
    if !nu.is_two_part() || nu.n() != n {
        return err("specht_relations needs a 2-part shape of n");
    }
    let n1 = nu.part(0);
    let n2 = if nu.rows() > 1 { nu.part(1) } else { 0 };
    // t₀: row 0 = 1,3,…,2ν₂−1, 2ν₂+1,…,n; row 1 = 2,4,…,2ν₂
    let row0 = |c: usize| -> usize {
        if c <= n2 {
            2 * c - 1
        } else {
            n2 + c
        }
    };
    let row1 = |c: usize| -> usize { 2 * c };
    let columns: Vec<PermOp> = (1..=n2)
        .map(|i| PermOp::PlusTransposition(2 * i - 1, 2 * i))
        .collect();
    let mut garnir = Vec::new();
    for c in 1..n1 {
        // row-1 violation at columns (c, c+1)
        let x: Vec<usize> = if c <= n2 {
            vec![row0(c), row1(c)]
        } else {
            vec![row0(c)]
        };
        garnir.push(garnir_op(&x, &[row0(c + 1)], n));
    }
    for c in 1..n2 {
        // row-2 violation at columns (c, c+1)
        garnir.push(garnir_op(&[row1(c)], &[row0(c + 1), row1(c + 1)], n));
    }
    Ok((columns, garnir))
}

/// Refine a candidate space: keep the combinations whose image under `op`
/// lies in X.
fn solve_step<B: ModuleBackend + ?Sized>(
    backend: &B,
    x_table: &PivotTable,
    basis: &[F2Vector],
    op: &PermOp,
) -> Vec<F2Vector> {
    let images: Vec<F2Vector> = basis
        .iter()
        .map(|b| {
            let mut y = op.apply(backend, b);
            x_table.reduce(&mut y);
            y
        })
        .collect();
    let combos = left_kernel_combinations(backend.ambient(), &images);
    combos
        .iter()
        .map(|c| {
            let mut w = F2Vector::zero(backend.ambient());
            for i in c.iter_ones() {
                w.xor_assign(&basis[i]);
            }
            w
        })
        .collect()
}

fn table_of(space: &Subspace) -> PivotTable {
    let mut t = PivotTable::new(space.ambient());
    for r in space.basis() {
        t.insert_reduced(r.clone());
    }
    t
}

/// Spin `w` over a submodule already known to be invariant; `cutoff` bounds
/// the total rank. Returns None if the closure exceeds the cutoff.
fn spin_over<B: ModuleBackend + ?Sized>(
    backend: &B,
    x: &Subspace,
    w: &F2Vector,
    cutoff: usize,
) -> Option<Subspace> {
    let mut table = table_of(x);
    let mut frontier = Vec::new();
    let mut v = w.clone();
    table.reduce(&mut v);
    if !v.is_zero() {
        table.insert_reduced(v.clone());
        frontier.push(v);
    }
    while let Some(v) = frontier.pop() {
        if table.rank() > cutoff {
            return None;
        }
        for g in 0..backend.num_gens() {
            let mut u = backend.apply_adjacent(g, &v);
            table.reduce(&mut u);
            if !u.is_zero() {
                table.insert_reduced(u.clone());
                frontier.push(u);
            }
        }
    }
    if table.rank() > cutoff {
        return None;
    }
    Some(Subspace::from_table(&table))
}

pub struct LatticeNode {
    pub dim: usize,
    pub space: Subspace,
}

pub struct LatticeGraph {
    /// sorted by (dim, canonical key)
    pub nodes: Vec<LatticeNode>,
    /// covering edges (from, to, ν of the added simple)
    pub edges: Vec<(usize, usize, Partition)>,
    pub bottom: usize,
    pub top: usize,
}

/// Candidate simples from the oracle profile of a 2-part shape.
pub fn two_part_candidates(lambda: &Partition) -> Result<Vec<(Partition, u128)>> {
    let prof = profile(lambda, 2)?;
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for f in &prof.factors {
        if seen.insert(f.nu.parts().to_vec()) {
            let d = dim_simple_2part(&f.nu)?;
            out.push((f.nu.clone(), d));
        }
    }
    Ok(out)
}

/// All 2-regular 2-part shapes of n in the same 2-block as λ (the candidate
/// pool for hook lattices, where every composition factor is of this form).
pub fn block_candidates(lambda: &Partition) -> Result<Vec<(Partition, u128)>> {
    let n = lambda.n();
    let mut out = Vec::new();
    for j in 0..=n / 2 {
        let nu = if j == 0 {
            Partition::new(vec![n])?
        } else {
            Partition::two_part(n - j, j)?
        };
        if is_p_regular(&nu, 2) && same_block(lambda, &nu, 2)? {
            let d = dim_simple_2part(&nu)?;
            out.push((nu, d));
        }
    }
    Ok(out)
}

/// Full submodule lattice by BFS from 0: at each node X, solve each
/// candidate presentation modulo X and spin the solutions (2^h − 1
/// combinations, early cutoff) to lift the simple submodules of M/X.
pub fn submodule_lattice<B: ModuleBackend + ?Sized>(
    backend: &B,
    candidates: &[(Partition, u128)],
    guard: usize,
) -> Result<LatticeGraph> {
    let module = backend.module();
    let mdim = module.dim();
    let mut cands: Vec<(Partition, usize)> = candidates
        .iter()
        .map(|(nu, d)| (nu.clone(), *d as usize))
        .collect();
    // ascending ν₂ so the column-relation prefix is shared
    cands.sort_by_key(|(nu, _)| if nu.rows() > 1 { nu.part(1) } else { 0 });

    let mut nodes: Vec<LatticeNode> = Vec::new();
    let mut index: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    let mut edges: BTreeSet<(usize, usize, Vec<usize>)> = BTreeSet::new();
    let zero = Subspace::zero(backend.ambient());
    index.insert(zero.canonical_key(), 0);
    nodes.push(LatticeNode { dim: 0, space: zero });

    let mut next = 0usize;
    while next < nodes.len() {
        let i = next;
        next += 1;
        let xdim = nodes[i].dim;
        if xdim == mdim {
            continue;
        }
        let x = nodes[i].space.clone();
        let x_table = table_of(&x);
        // basis of the quotient M/X (coset representatives)
        let mut start = PivotTable::new(backend.ambient());
        for b in module.basis() {
            let mut v = b.clone();
            x_table.reduce(&mut v);
            start.insert(v);
        }
        let mut prefix: Vec<Vec<F2Vector>> = vec![start.rref_rows()];
        let mut found_any = false;
        for (nu, dimd) in &cands {
            let quot = mdim - xdim;
            if *dimd > quot {
                continue;
            }
            let nu2 = if nu.rows() > 1 { nu.part(1) } else { 0 };
            let (columns, garnir) = specht_relations(nu, backend.n())?;
            while prefix.len() <= nu2 {
                let j = prefix.len();
                let refined = solve_step(backend, &x_table, &prefix[j - 1], &columns[j - 1]);
                prefix.push(refined);
            }
            let mut sols = prefix[nu2].clone();
            for op in &garnir {
                if sols.is_empty() {
                    break;
                }
                sols = solve_step(backend, &x_table, &sols, op);
            }
            let h = sols.len();
            if h == 0 {
                continue;
            }
            if h > 16 {
                return err(format!(
                    "hom space for {} at a node of dim {xdim} has dim {h}; refusing 2^h spins",
                    nu.display()
                ));
            }
            for mask in 1u32..(1 << h) {
                let mut w = F2Vector::zero(backend.ambient());
                for (j, s) in sols.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        w.xor_assign(s);
                    }
                }
                let y = if *dimd == quot {
                    // M/X has the dimension of the candidate's head and a
                    // nonzero hom from S^ν, so it is simple: Y = M
                    Some(module.clone())
                } else {
                    spin_over(backend, &x, &w, xdim + dimd)
                };
                let Some(y) = y else { continue };
                if y.dim() != xdim + dimd {
                    // a proper quotient of S^ν always has dim ≥ dim D^ν
                    return err("spin closed below the head dimension");
                }
                found_any = true;
                let key = y.canonical_key();
                let to = match index.get(&key) {
                    Some(&t) => t,
                    None => {
                        let t = nodes.len();
                        if t >= guard {
                            return err(format!("node guard {guard} exceeded"));
                        }
                        index.insert(key, t);
                        nodes.push(LatticeNode { dim: y.dim(), space: y });
                        t
                    }
                };
                edges.insert((i, to, nu.parts().to_vec()));
                if *dimd == quot {
                    break;
                }
            }
        }
        if !found_any {
            return err(format!(
                "no simple submodule found above a node of dim {xdim} (incomplete candidates?)"
            ));
        }
    }
    // canonical order
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by(|&a, &b| {
        (nodes[a].dim, nodes[a].space.canonical_key())
            .cmp(&(nodes[b].dim, nodes[b].space.canonical_key()))
    });
    let mut place = vec![0usize; nodes.len()];
    for (new, &old) in order.iter().enumerate() {
        place[old] = new;
    }
    let mut sorted_nodes: Vec<Option<LatticeNode>> = nodes.into_iter().map(Some).collect();
    let nodes: Vec<LatticeNode> = order
        .iter()
        .map(|&old| sorted_nodes[old].take().unwrap())
        .collect();
    let edges: Vec<(usize, usize, Partition)> = edges
        .into_iter()
        .map(|(f, t, nu)| Ok((place[f], place[t], Partition::new(nu)?)))
        .collect::<Result<Vec<_>>>()?;
    let bottom = 0;
    let top = nodes.len() - 1;
    if nodes[top].dim != mdim {
        return err("lattice does not reach the full module");
    }
    Ok(LatticeGraph { nodes, edges, bottom, top })
}

impl LatticeGraph {
    pub fn node_dims(&self) -> Vec<usize> {
        self.nodes.iter().map(|n| n.dim).collect()
    }

    /// containment matrix leq[a][b] ⟺ node a ⊆ node b
    pub fn order(&self) -> Vec<Vec<bool>> {
        let n = self.nodes.len();
        let mut leq = vec![vec![false; n]; n];
        for a in 0..n {
            for b in 0..n {
                leq[a][b] = self.nodes[b].space.contains(&self.nodes[a].space);
            }
        }
        leq
    }

    pub fn is_uniserial(&self) -> bool {
        let leq = self.order();
        let n = self.nodes.len();
        (0..n).all(|a| (0..n).all(|b| leq[a][b] || leq[b][a]))
    }

    fn meet_join(&self) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>)> {
        let leq = self.order();
        let n = self.nodes.len();
        let mut meet = vec![vec![0usize; n]; n];
        let mut join = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&c| leq[c][a] && leq[c][b]).collect();
                let m = *lower
                    .iter()
                    .max_by_key(|&&c| self.nodes[c].dim)
                    .ok_or_else(|| crate::Error("no lower bound".into()))?;
                if !lower.iter().all(|&c| leq[c][m]) {
                    return err("node set is not meet-closed");
                }
                meet[a][b] = m;
                let upper: Vec<usize> = (0..n).filter(|&c| leq[a][c] && leq[b][c]).collect();
                let j = *upper
                    .iter()
                    .min_by_key(|&&c| self.nodes[c].dim)
                    .ok_or_else(|| crate::Error("no upper bound".into()))?;
                if !upper.iter().all(|&c| leq[j][c]) {
                    return err("node set is not join-closed");
                }
                join[a][b] = j;
            }
        }
        Ok((meet, join))
    }

    /// Distributivity of the lattice (equivalently: no M₃ or N₅ sublattice).
    pub fn is_distributive(&self) -> Result<bool> {
        let (meet, join) = self.meet_join()?;
        let n = self.nodes.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]] {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Index of the node equal to the given subspace, if present.
    pub fn find(&self, space: &Subspace) -> Option<usize> {
        let key = space.canonical_key();
        self.nodes.iter().position(|n| n.space.canonical_key() == key)
    }
}

/// Exact comparison of a computed lattice against the oracle prediction for a
/// 2-part shape: a dim- and label-preserving graph isomorphism must exist.
pub fn compare_with_prediction(lat: &LatticeGraph, pred: &PredictedLattice) -> Result<()> {
    if lat.nodes.len() != pred.nodes.len() {
        return err(format!(
            "node count {} vs predicted {}",
            lat.nodes.len(),
            pred.nodes.len()
        ));
    }
    let mut got: Vec<u128> = lat.node_dims().iter().map(|&d| d as u128).collect();
    let mut want: Vec<u128> = pred.nodes.iter().map(|(_, d)| *d).collect();
    got.sort_unstable();
    want.sort_unstable();
    if got != want {
        return err(format!("node dims {got:?} vs predicted {want:?}"));
    }
    if lat.edges.len() != pred.edges.len() {
        return err(format!(
            "edge count {} vs predicted {}",
            lat.edges.len(),
            pred.edges.len()
        ));
    }
    if pred.edges.is_empty() {
        return Ok(());
    }
    // predicted edge labels are factor δ's; the computed labels are the
    // shapes ν = (λ₁+δ, λ₂−δ). Recover λ by pairing any predicted δ with a
    // computed ν through the oracle dim table.
    let mut lam: Option<(usize, usize)> = None;
    let d0 = pred.edges[0].2;
    let dim0 = pred
        .factor_dims
        .iter()
        .find(|(d, _)| *d == d0)
        .map(|(_, x)| *x)
        .ok_or_else(|| crate::Error("predicted edge label outside factor table".into()))?;
    for (_, _, nu) in &lat.edges {
        if dim_simple_2part(nu)? == dim0 {
            let n1 = nu.part(0);
            let n2 = if nu.rows() > 1 { nu.part(1) } else { 0 };
            if n1 as u128 >= d0 {
                lam = Some((n1 - d0 as usize, n2 + d0 as usize));
                break;
            }
        }
    }
    let lam = lam.ok_or_else(|| crate::Error("cannot recover λ for edge labels".into()))?;
    let pred_edges_nu: Vec<(usize, usize, Vec<usize>)> = pred
        .edges
        .iter()
        .map(|(f, t, d)| {
            let nu1 = lam.0 + *d as usize;
            let nu2 = lam.1 - *d as usize;
            let parts = if nu2 == 0 { vec![nu1] } else { vec![nu1, nu2] };
            (*f, *t, parts)
        })
        .collect();
    // backtracking isomorphism: match predicted nodes to computed nodes with
    // equal dims, preserving labeled edges (endpoint dims alone are not
    // enough when dims tie, hence the search)
    let n = lat.nodes.len();
    let mut lat_adj: BTreeSet<(usize, usize, Vec<usize>)> = BTreeSet::new();
    for (f, t, nu) in &lat.edges {
        lat_adj.insert((*f, *t, nu.parts().to_vec()));
    }
    fn bt(
        k: usize,
        pred: &PredictedLattice,
        lat: &LatticeGraph,
        lat_adj: &BTreeSet<(usize, usize, Vec<usize>)>,
        pred_edges_nu: &[(usize, usize, Vec<usize>)],
        assign: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = assign.len();
        if k == n {
            return true;
        }
        'cand: for cand in 0..n {
            if used[cand] || lat.nodes[cand].dim as u128 != pred.nodes[k].1 {
                continue;
            }
            assign[k] = cand;
            used[cand] = true;
            for (f, t, nu) in pred_edges_nu {
                if *f <= k && *t <= k && !lat_adj.contains(&(assign[*f], assign[*t], nu.clone())) {
                    used[cand] = false;
                    continue 'cand;
                }
            }
            if bt(k + 1, pred, lat, lat_adj, pred_edges_nu, assign, used) {
                return true;
            }
            used[cand] = false;
        }
        false
    }
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if bt(0, pred, lat, &lat_adj, &pred_edges_nu, &mut assign, &mut used) {
        Ok(())
    } else {
        err("no dim/label-preserving isomorphism with the prediction")
    }
}
