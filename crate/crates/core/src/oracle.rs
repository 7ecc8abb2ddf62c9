//! Brute-force oracles and per-shape certification.
//!
//! Everything here is deliberately naive and rebuilds the graph from the
//! parts of the diagram, so agreement with the main algorithms is evidence
//! rather than a tautology. Every enumeration takes an explicit budget and
//! refuses with the required count when it would exceed it.

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::decorated::DecoratedTableau;
use crate::error::{Error, Result};
use crate::ferrers::{diagrams_up_to, FerrersDiagram, FerrersGraph};
use crate::perm::{DecoratedPermutation, Permutation};
use crate::sandpile::Configuration;
use crate::tableau::{enumerate_tableaux, EWTableau};
use crate::toppling::stabilize_perm;
use crate::tree::IntransitiveTree;

pub const DEFAULT_BUDGET: u128 = 10_000_000;
pub const BUDGET_ENV: &str = "FERRERS_ORACLE_BUDGET";

/// The budget from `FERRERS_ORACLE_BUDGET`, or [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> u128 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

fn check_budget(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

/// Adjacency matrix rebuilt by walking the border of the diagram.
struct NaiveGraph {
    adj: Vec<Vec<bool>>,
    deg: Vec<u32>,
}

impl NaiveGraph {
    fn new(parts: &[usize]) -> Self {
        let n1 = parts.len() + parts[0];
        // label of each row (top down) and each column (left to right)
        let mut row_label = vec![0; parts.len()];
        let mut col_label = vec![0; parts[0]];
        let mut label = 0;
        for r in 0..parts.len() {
            row_label[r] = label;
            label += 1;
            let next = parts.get(r + 1).copied().unwrap_or(0);
            for x in (next..parts[r]).rev() {
                col_label[x] = label;
                label += 1;
            }
        }
        let mut adj = vec![vec![false; n1]; n1];
        for (r, &len) in parts.iter().enumerate() {
            for &c in &col_label[..len] {
                adj[row_label[r]][c] = true;
                adj[c][row_label[r]] = true;
            }
        }
        let deg = adj.iter().map(|a| a.iter().filter(|&&b| b).count() as u32).collect();
        NaiveGraph { adj, deg }
    }

    fn n(&self) -> usize {
        self.adj.len() - 1
    }

    /// Topples any unstable vertex until none is left.
    fn stabilize(&self, h: &mut [u32]) {
        loop {
            let Some(v) = (1..=self.n()).find(|&v| h[v - 1] >= self.deg[v]) else {
                return;
            };
            h[v - 1] -= self.deg[v];
            for u in 1..=self.n() {
                if self.adj[v][u] {
                    h[u - 1] += 1;
                }
            }
        }
    }

    /// A stable `h` is recurrent when adding the sink's grains and
    /// stabilizing gives `h` back.
    fn is_recurrent(&self, h: &[u32]) -> bool {
        let mut g: Vec<u32> = h
            .iter()
            .enumerate()
            .map(|(k, &x)| x + u32::from(self.adj[0][k + 1]))
            .collect();
        self.stabilize(&mut g);
        g == h
    }
}

/// Every stable configuration, in lexicographic order.
pub fn enumerate_stable(g: &FerrersGraph, budget: u128) -> Result<Vec<Configuration>> {
    let ng = NaiveGraph::new(g.diagram().parts());
    let required: u128 = ng.deg[1..].iter().map(|&d| d as u128).product();
    check_budget(required, budget)?;
    let n = ng.n();
    let mut out = Vec::with_capacity(required as usize);
    let mut h = vec![0u32; n];
    loop {
        out.push(Configuration::new(h.clone()));
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            h[k] += 1;
            if h[k] < ng.deg[k + 1] {
                break;
            }
            h[k] = 0;
        }
    }
}

/// Every recurrent configuration, in lexicographic order.
pub fn enumerate_recurrent(g: &FerrersGraph, budget: u128) -> Result<Vec<Configuration>> {
    let ng = NaiveGraph::new(g.diagram().parts());
    Ok(enumerate_stable(g, budget)?
        .into_iter()
        .filter(|c| ng.is_recurrent(c.heights()))
        .collect())
}

/// Recurrent configurations from which no single grain can be removed.
pub fn enumerate_minimal_recurrent(g: &FerrersGraph, budget: u128) -> Result<Vec<Configuration>> {
    let rec = enumerate_recurrent(g, budget)?;
    let set: HashSet<&[u32]> = rec.iter().map(|c| c.heights()).collect();
    Ok(rec
        .iter()
        .filter(|c| {
            (0..c.len()).all(|k| {
                if c.heights()[k] == 0 {
                    return true;
                }
                let mut d = c.heights().to_vec();
                d[k] -= 1;
                !set.contains(d.as_slice())
            })
        })
        .cloned()
        .collect())
}

/// Every EW-tableau of the shape, found by filtering all 0/1 fillings,
/// in the compact `111/00/0` form and sorted.
pub fn enumerate_tableaux_brute(shape: &FerrersDiagram, budget: u128) -> Result<Vec<String>> {
    let parts = shape.parts();
    let cells: usize = parts.iter().sum();
    let required = 1u128.checked_shl(cells as u32).unwrap_or(u128::MAX);
    check_budget(required, budget)?;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << cells) {
        let mut grid = Vec::new();
        let mut bit = 0;
        for &len in parts {
            grid.push((0..len).map(|x| mask >> (bit + x) & 1 == 1).collect::<Vec<bool>>());
            bit += len;
        }
        if is_ew_filling(&grid) {
            let rows: Vec<String> = grid
                .iter()
                .map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect())
                .collect();
            out.push(rows.join("/"));
        }
    }
    out.sort();
    Ok(out)
}

fn is_ew_filling(grid: &[Vec<bool>]) -> bool {
    if !grid[0].iter().all(|&b| b) || grid[1..].iter().any(|r| r.iter().all(|&b| b)) {
        return false;
    }
    for r1 in 0..grid.len() {
        for r2 in r1 + 1..grid.len() {
            for x1 in 0..grid[r2].len() {
                for x2 in x1 + 1..grid[r2].len() {
                    let (a, b) = (grid[r1][x1], grid[r1][x2]);
                    let (c, d) = (grid[r2][x1], grid[r2][x2]);
                    if a == d && b == c && a != b {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Permutations of `1..=n` whose descent bottoms are exactly `bottoms`,
/// found by running through all `n!` permutations in lexicographic order.
pub fn permutations_with_descent_bottoms(
    n: usize,
    bottoms: &[usize],
    budget: u128,
) -> Result<Vec<Vec<usize>>> {
    let required = (1..=n as u128).product::<u128>();
    check_budget(required, budget)?;
    let want: BTreeSet<usize> = bottoms.iter().copied().collect();
    let mut p: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        let got: BTreeSet<usize> = p.windows(2).filter(|w| w[0] > w[1]).map(|w| w[1]).collect();
        if got == want {
            out.push(p.clone());
        }
        // next permutation
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return Ok(out);
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Parent arrays of every intransitive tree on `0..=n` rooted at `0`,
/// decoded from all Prüfer sequences.
pub fn enumerate_intransitive_trees(n: usize, budget: u128) -> Result<Vec<Vec<Option<usize>>>> {
    let v = n + 1;
    if v == 1 {
        return Ok(vec![vec![None]]);
    }
    let required = (v as u128).pow(v.saturating_sub(2) as u32);
    check_budget(required, budget)?;
    let mut out = Vec::new();
    let mut seq = vec![0usize; v - 2];
    loop {
        let adj = prufer_decode(&seq, v);
        let intransitive = (0..v).all(|x| {
            adj[x].iter().all(|&y| y > x) || adj[x].iter().all(|&y| y < x)
        });
        if intransitive {
            out.push(root_at_zero(&adj));
        }
        let mut k = seq.len();
        loop {
            if k == 0 {
                out.sort();
                return Ok(out);
            }
            k -= 1;
            seq[k] += 1;
            if seq[k] < v {
                break;
            }
            seq[k] = 0;
        }
    }
}

fn prufer_decode(seq: &[usize], v: usize) -> Vec<Vec<usize>> {
    let mut degree = vec![1; v];
    for &s in seq {
        degree[s] += 1;
    }
    let mut adj = vec![Vec::new(); v];
    for &s in seq {
        let leaf = (0..v).find(|&x| degree[x] == 1).expect("a leaf exists");
        adj[leaf].push(s);
        adj[s].push(leaf);
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let last: Vec<usize> = (0..v).filter(|&x| degree[x] == 1).collect();
    adj[last[0]].push(last[1]);
    adj[last[1]].push(last[0]);
    adj
}

fn root_at_zero(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut parent = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some(x);
                stack.push(y);
            }
        }
    }
    parent
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShapeReport {
    pub shape: String,
    pub semiperimeter: usize,
    pub properties: Vec<PropertyResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub goldens: Option<Value>,
}

impl ShapeReport {
    /// No property failed.
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.properties.iter().filter(|p| p.status == Status::Fail)
    }

    /// One line: shape, verdict, failing property names.
    pub fn summary(&self) -> String {
        let failed: Vec<&str> = self.failures().map(|p| p.name.as_str()).collect();
        if failed.is_empty() {
            format!("shape {}: pass ({} properties)", self.shape, self.properties.len())
        } else {
            format!("shape {}: FAIL {}", self.shape, failed.join(", "))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    pub budget: u128,
    /// Grain additions checked against the permutation-side stabilization.
    pub walk_steps: usize,
    pub seed: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            budget: budget_from_env(),
            walk_steps: 200,
            seed: 0x5eed,
        }
    }
}

type Check = std::result::Result<(), Value>;

fn fail(what: &str, payload: Value) -> Check {
    Err(json!({ "property": what, "witness": payload }))
}

/// Runs the full invariant suite for one shape.
pub fn certify_shape(shape: &FerrersDiagram, opts: &CertifyOptions) -> Result<ShapeReport> {
    let g = shape.graph();
    let rec = enumerate_recurrent(&g, opts.budget)?;
    let minimal = enumerate_minimal_recurrent(&g, opts.budget)?;
    let tableaux = enumerate_tableaux(shape);
    let mut props = Vec::new();
    let mut record = |name: &str, check: Option<Check>| {
        let (status, counterexample) = match check {
            None => (Status::Skipped, None),
            Some(Ok(())) => (Status::Pass, None),
            Some(Err(v)) => (Status::Fail, Some(v)),
        };
        props.push(PropertyResult {
            name: name.to_string(),
            status,
            counterexample,
        });
    };

    record("recurrent_count", Some(check_recurrent_count(&g, &rec)));
    record("burning_agrees", Some(check_burning(&g, &rec, opts.budget)?));
    record(
        "tableaux_brute_force",
        enumerate_tableaux_brute(shape, opts.budget)
            .ok()
            .map(|brute| check_tableaux_brute(&tableaux, &brute)),
    );
    record("minimal_count", Some(check_minimal(&g, &tableaux, &minimal)));
    record("phi_round_trip", Some(check_phi(&g, &tableaux)));
    record("nu_equals_mu", Some(check_nu_mu(&g, &tableaux)));
    record("classification", Some(check_classification(&tableaux, &rec)));
    record("psi_round_trip", Some(check_psi(&g, &rec)));
    record(
        "permutations",
        permutations_with_descent_bottoms(g.n(), &shape.labeling().rows()[1..], opts.budget)
            .ok()
            .map(|perms| check_permutations(shape, &tableaux, &perms)),
    );
    record("tree_round_trip", Some(check_trees(&g, &rec)));
    record("cornersupports", Some(check_cornersupports(&tableaux)));
    record("perm_stabilization", Some(check_perm_stabilization(&g, &rec, opts)));

    let goldens = goldens_for(shape);
    if let Some((_, check)) = &goldens {
        record("goldens", Some(check.clone()));
    }

    Ok(ShapeReport {
        shape: shape.to_string(),
        semiperimeter: shape.semiperimeter(),
        properties: props,
        goldens: goldens.map(|(v, _)| v),
    })
}

/// Certifies every shape with semiperimeter in `2..=max`, in parallel,
/// reports ordered as [`diagrams_up_to`] lists the shapes.
pub fn certify_all(max_semiperimeter: usize, opts: &CertifyOptions) -> Result<Vec<ShapeReport>> {
    diagrams_up_to(max_semiperimeter)
        .par_iter()
        .map(|d| certify_shape(d, opts))
        .collect()
}

fn cfg(c: &Configuration) -> Value {
    json!(c.heights())
}

fn check_recurrent_count(g: &FerrersGraph, rec: &[Configuration]) -> Check {
    match g.spanning_tree_count() {
        Ok(t) if t == rec.len() as u128 => Ok(()),
        Ok(t) => fail("recurrent_count", json!({ "oracle": rec.len(), "spanning_trees": t.to_string() })),
        Err(e) => fail("recurrent_count", json!({ "error": e.to_string() })),
    }
}

fn check_burning(g: &FerrersGraph, rec: &[Configuration], budget: u128) -> Result<Check> {
    let set: HashSet<&Configuration> = rec.iter().collect();
    for c in enumerate_stable(g, budget)? {
        if g.is_recurrent(&c)? != set.contains(&c) {
            return Ok(fail("burning_agrees", cfg(&c)));
        }
    }
    Ok(Ok(()))
}

fn check_tableaux_brute(tableaux: &[EWTableau], brute: &[String]) -> Check {
    let mut fast: Vec<String> = tableaux.iter().map(|t| t.to_compact()).collect();
    fast.sort();
    if fast == brute {
        Ok(())
    } else {
        fail("tableaux_brute_force", json!({ "backtracking": fast, "brute_force": brute }))
    }
}

fn check_minimal(g: &FerrersGraph, tableaux: &[EWTableau], minimal: &[Configuration]) -> Check {
    let images: BTreeSet<Configuration> = tableaux.iter().map(|t| t.phi_tc()).collect();
    let oracle: BTreeSet<Configuration> = minimal.iter().cloned().collect();
    if images.len() != tableaux.len() || images != oracle {
        let diff: Vec<Value> = images.symmetric_difference(&oracle).map(cfg).collect();
        return fail("minimal_count", json!({ "symmetric_difference": diff }));
    }
    for c in minimal {
        if g.level(c) != 0 || !matches!(g.is_minimal_recurrent(c), Ok(true)) {
            return fail("minimal_count", cfg(c));
        }
    }
    Ok(())
}

fn check_phi(g: &FerrersGraph, tableaux: &[EWTableau]) -> Check {
    for t in tableaux {
        match g.phi_ct(&t.phi_tc()) {
            Ok(back) if back == *t => {}
            _ => return fail("phi_round_trip", json!(t.to_compact())),
        }
    }
    Ok(())
}

fn check_nu_mu(g: &FerrersGraph, tableaux: &[EWTableau]) -> Check {
    for t in tableaux {
        match g.mu(&t.phi_tc()) {
            Ok(mu) if mu == t.nu() => {}
            _ => return fail("nu_equals_mu", json!({ "tableau": t.to_compact(), "nu": t.nu() })),
        }
    }
    Ok(())
}

fn check_classification(tableaux: &[EWTableau], rec: &[Configuration]) -> Check {
    let oracle: HashSet<&Configuration> = rec.iter().collect();
    let mut seen = HashSet::new();
    for t in tableaux {
        for d in DecoratedTableau::all_canonical(t) {
            let c = d.to_configuration();
            if !oracle.contains(&c) || !seen.insert(c.clone()) {
                return fail(
                    "classification",
                    json!({ "tableau": t.to_compact(), "decorations": d.decorations(), "configuration": cfg(&c) }),
                );
            }
        }
    }
    if seen.len() != rec.len() {
        let missing = rec.iter().find(|c| !seen.contains(*c)).expect("counts differ");
        return fail("classification", json!({ "unreached": cfg(missing) }));
    }
    Ok(())
}

fn check_psi(g: &FerrersGraph, rec: &[Configuration]) -> Check {
    for c in rec {
        let ok = g
            .psi(c)
            .is_ok_and(|d| d.is_canonical() && d.to_configuration() == *c)
            && g
                .decorated_permutation(c)
                .is_ok_and(|p| p.is_canonical() && p.to_configuration() == *c);
        if !ok {
            return fail("psi_round_trip", cfg(c));
        }
    }
    Ok(())
}

fn check_permutations(shape: &FerrersDiagram, tableaux: &[EWTableau], perms: &[Vec<usize>]) -> Check {
    let mut images = Vec::new();
    for t in tableaux {
        let p = t.to_permutation();
        match EWTableau::from_permutation(&p, shape) {
            Ok(back) if back == *t => images.push(p.letters().to_vec()),
            _ => return fail("permutations", json!({ "tableau": t.to_compact(), "perm": p.to_string() })),
        }
    }
    images.sort();
    if images != perms {
        return fail("permutations", json!({ "from_tableaux": images, "oracle": perms }));
    }
    Ok(())
}

fn check_trees(g: &FerrersGraph, rec: &[Configuration]) -> Check {
    for c in rec {
        let (Ok(d), Ok(ct)) = (g.decorated_permutation(c), g.canon_top(c)) else {
            return fail("tree_round_trip", cfg(c));
        };
        let Ok(t) = IntransitiveTree::from_permutation(&d) else {
            return fail("tree_round_trip", json!({ "perm": d.to_string() }));
        };
        if t.to_permutation() != d || t.bfs_levels() != ct.blocks() {
            return fail("tree_round_trip", json!({ "perm": d.to_string(), "parent": t.parents() }));
        }
    }
    Ok(())
}

fn check_cornersupports(tableaux: &[EWTableau]) -> Check {
    for t in tableaux {
        if t.cornersupports() != t.cornersupports_definitional() {
            return fail("cornersupports", json!({ "tableau": t.to_compact() }));
        }
        let s = t.supplementary();
        for (r, &j) in s.row_labels().iter().enumerate() {
            for (x, &k) in s.col_labels().iter().enumerate() {
                if j > k && t.supplementary_entry_direct(j, k) != Ok(s.at(r, x)) {
                    return fail(
                        "cornersupports",
                        json!({ "tableau": t.to_compact(), "row": j, "col": k }),
                    );
                }
            }
        }
    }
    Ok(())
}

/// Random walk over recurrent states: add a grain, stabilize on the graph
/// and on the decorated permutation, and compare.
fn check_perm_stabilization(g: &FerrersGraph, rec: &[Configuration], opts: &CertifyOptions) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut c = rec[rng.gen_range(0..rec.len())].clone();
    for _ in 0..opts.walk_steps {
        if rng.gen_ratio(1, 10) {
            c = rec[rng.gen_range(0..rec.len())].clone();
        }
        let v = rng.gen_range(1..=g.n());
        c = perm_stabilization_step(g, &c, v)?;
    }
    Ok(())
}

/// One grain at `v` on recurrent `c`; returns the new recurrent state or
/// a counterexample.
pub fn perm_stabilization_step(
    g: &FerrersGraph,
    c: &Configuration,
    v: usize,
) -> std::result::Result<Configuration, Value> {
    let witness = || json!({ "configuration": c.heights(), "vertex": v });
    let mut bumped = c.heights().to_vec();
    bumped[v - 1] += 1;
    let next = g
        .stabilize(&Configuration::new(bumped))
        .map_err(|_| witness())?
        .stable;
    let expected = g
        .psi(&next)
        .map(|d| DecoratedPermutation::from_tableau(&d))
        .map_err(|_| witness())?;
    let start = g.decorated_permutation(c).map_err(|_| witness())?;
    let mut a = start.decorations().to_vec();
    a[v - 1] += 1;
    let unstable = DecoratedPermutation::new(start.perm().clone(), a).map_err(|_| witness())?;
    let (got, _) = stabilize_perm(&unstable);
    if got != expected {
        return Err(json!({
            "configuration": c.heights(),
            "vertex": v,
            "graph_side": expected.to_string(),
            "perm_side": got.to_string(),
        }));
    }
    Ok(next)
}

/// Golden values recorded for two reference shapes, with their check.
fn goldens_for(shape: &FerrersDiagram) -> Option<(Value, Check)> {
    let g = shape.graph();
    match shape.parts() {
        [5, 3, 3, 2] => {
            let t: EWTableau = "11111/010/011/01".parse().ok()?;
            let c = Configuration::new(vec![0, 0, 2, 1, 0, 0, 3, 2]);
            let expected = json!({
                "tableau": "11111/010/011/01",
                "phi_tc": [0, 0, 1, 2, 1, 1, 0, 3],
                "canon_top_of_tableau": "({0},{1,2,8},{4,6},{5},{3},{7})",
                "configuration": [0, 0, 2, 1, 0, 0, 3, 2],
                "canon_top_of_configuration": "({0},{1,2,7},{3},{8},{4,6},{5})",
                "zeta": "12738645",
            });
            let got = json!({
                "tableau": t.to_compact(),
                "phi_tc": t.phi_tc().heights(),
                "canon_top_of_tableau": t.canon_top().to_string(),
                "configuration": c.heights(),
                "canon_top_of_configuration": g.canon_top(&c).map(|x| x.to_string()).unwrap_or_default(),
                "zeta": g.zeta(&c).map(|p| p.to_string()).unwrap_or_default(),
            });
            Some(golden_check(expected, got))
        }
        [3, 2, 1] => {
            let c = Configuration::new(vec![0, 1, 1, 0, 2]);
            let expected = json!({
                "recurrent": [[0, 0, 1, 0, 2], [0, 1, 0, 0, 2], [0, 1, 1, 0, 1], [0, 1, 1, 0, 2]],
                "minrec_of_01102": [0, 0, 1, 0, 2],
                "tableaux": ["111/00/0", "111/01/0", "111/10/0"],
            });
            let rec: Vec<Vec<u32>> = enumerate_recurrent(&g, DEFAULT_BUDGET)
                .ok()?
                .into_iter()
                .map(Configuration::into_heights)
                .collect();
            let got = json!({
                "recurrent": rec,
                "minrec_of_01102": g.minrec(&c).map(Configuration::into_heights).unwrap_or_default(),
                "tableaux": enumerate_tableaux(shape).iter().map(|t| t.to_compact()).collect::<Vec<_>>(),
            });
            Some(golden_check(expected, got))
        }
        _ => None,
    }
}

fn golden_check(expected: Value, got: Value) -> (Value, Check) {
    let check = if expected == got {
        Ok(())
    } else {
        fail("goldens", json!({ "expected": expected.clone(), "got": got }))
    };
    (expected, check)
}

/// Canonical decorated permutations of `1..=n`, by brute force over all
/// permutations.
pub fn canonical_decorated_permutations(n: usize, budget: u128) -> Result<Vec<DecoratedPermutation>> {
    let required = (1..=n as u128).product::<u128>();
    check_budget(required, budget)?;
    let mut out = Vec::new();
    let mut p: Vec<usize> = (1..=n).collect();
    loop {
        out.extend(DecoratedPermutation::all_canonical(&Permutation::new(p.clone())?));
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return Ok(out);
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}
