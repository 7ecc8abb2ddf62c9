//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ferrers_sandpile::oracle::{
    enumerate_recurrent, enumerate_stable, permutations_with_descent_bottoms, DEFAULT_BUDGET,
};
use ferrers_sandpile::{
    diagrams_up_to, enumerate_tableaux, stabilize_perm, Configuration, DecoratedPermutation,
    DecoratedTableau, EWTableau, FerrersDiagram, IntransitiveTree, StepKind,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn shape(s: &str) -> FerrersDiagram {
    s.parse().unwrap()
}

fn conf(h: &[u32]) -> Configuration {
    Configuration::new(h.to_vec())
}

fn goldens() -> Outcome {
    let g = shape("5,3,3,2").graph();
    let t: EWTableau = "11111/010/011/01".parse().unwrap();
    ensure(t.phi_tc() == conf(&[0, 0, 1, 2, 1, 1, 0, 3]), || format!("phi_tc {}", t.phi_tc()))?;
    let ct = g.canon_top(&t.phi_tc()).map_err(|e| e.to_string())?;
    ensure(ct.to_string() == "({0},{1,2,8},{4,6},{5},{3},{7})", || format!("canonTop {ct}"))?;
    ensure(t.canon_top() == ct, || "tableau-side canonTop differs".into())?;

    let c = conf(&[0, 0, 2, 1, 0, 0, 3, 2]);
    let ct = g.canon_top(&c).map_err(|e| e.to_string())?;
    ensure(ct.to_string() == "({0},{1,2,7},{3},{8},{4,6},{5})", || format!("canonTop {ct}"))?;
    let zeta = g.zeta(&c).map_err(|e| e.to_string())?;
    ensure(zeta.to_string() == "12738645", || format!("zeta {zeta}"))?;

    let g321 = shape("3,2,1").graph();
    let m = g321.minrec(&conf(&[0, 1, 1, 0, 2])).map_err(|e| e.to_string())?;
    ensure(m == conf(&[0, 0, 1, 0, 2]), || format!("minrec {m}"))?;

    let s = "11111/101/001/00".parse::<EWTableau>().unwrap().supplementary();
    ensure(s.row_strings() == ["11111", "10100", "00100", "00100"], || format!("S {s}"))?;

    let big: EWTableau = "1111111111111/00111000000/10111101110/101110/1011/001/101".parse().unwrap();
    let nu = big.nu();
    ensure(
        nu == [1, 1, 1, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1],
        || format!("nu {nu:?}"),
    )?;
    let nu = "1111/0000/010/01".parse::<EWTableau>().unwrap().nu();
    ensure(nu == [1, 1, 2, 1, 1, 2, 1], || format!("nu {nu:?}"))?;

    let d: DecoratedPermutation = "6^0 9^0 - 5^1 4^1 2^0 1^1 - 3^1 7^2 8^1".parse().unwrap();
    ensure(d.perm().to_string() == "695421378", || "tree perm".into())?;
    let tree = IntransitiveTree::from_permutation(&d).map_err(|e| e.to_string())?;
    let parent = [None, Some(6), Some(9), Some(2), Some(6), Some(6), Some(0), Some(4), Some(2), Some(0)];
    ensure(tree.parents() == parent, || format!("tree {:?}", tree.parents()))?;
    ensure(tree.to_permutation() == d, || "tree -> perm".into())?;

    three_topple_trace()?;
    Ok("all goldens bit-exact".into())
}

/// The trace is checked on three sides: permutation states, their tableaux
/// and the configurations reached by toppling on the graph.
fn three_topple_trace() -> Result<(), String> {
    let g = shape("4,4,4,3").graph();
    let start: DecoratedPermutation = "6^1 7^0 - 2^1 - 3^0 5^0 - 4^0 1^1".parse().unwrap();
    let mut c = conf(&[1, 3, 1, 0, 2, 4, 3]);
    ensure(start.to_configuration() == c, || "start configuration".into())?;
    let (out, trace) = stabilize_perm(&start);
    let perm_states = [
        "7^0 - 2^1 - 3^0 5^0 - 4^0 1^1 - 6^0",
        "3^0 5^0 7^1 - 4^0 1^1 - 6^0 - 2^0",
        "3^0 5^0 - 4^0 1^1 - 6^0 - 2^0 - 7^0",
    ];
    ensure(trace.len() == 3, || format!("trace length {}", trace.len()))?;
    for (step, (expected, v)) in trace.iter().zip(perm_states.iter().zip([6, 2, 7])) {
        ensure(step.kind == StepKind::Topple { letter: v }, || format!("step {step}"))?;
        ensure(step.state.to_string() == *expected, || format!("state {}", step.state))?;
        c = g.topple(&c, v).map_err(|e| e.to_string())?;
        ensure(step.state.configuration() == c, || format!("graph side after {v}: {c}"))?;
        let dp: DecoratedPermutation = expected.parse().map_err(|e| format!("{e}"))?;
        let dt = dp.to_tableau().map_err(|e| e.to_string())?;
        ensure(dt.to_configuration() == c, || format!("tableau side after {v}"))?;
    }
    ensure(c == conf(&[3, 1, 2, 2, 3, 1, 0]), || format!("final {c}"))?;
    ensure(out.is_canonical(), || "final state not canonical".into())?;
    let dt = g.psi(&c).map_err(|e| e.to_string())?;
    ensure(DecoratedPermutation::from_tableau(&dt) == out, || "psi of final".into())?;
    Ok(())
}

fn counting() -> Outcome {
    let mut shapes = 0;
    for d in diagrams_up_to(9) {
        let g = d.graph();
        let trees = g.spanning_tree_count().map_err(|e| e.to_string())?;
        let oracle = enumerate_recurrent(&g, DEFAULT_BUDGET).map_err(|e| e.to_string())?.len();
        let burning = enumerate_stable(&g, DEFAULT_BUDGET)
            .map_err(|e| e.to_string())?
            .iter()
            .filter(|c| g.is_recurrent(c).unwrap())
            .count();
        ensure(
            trees == oracle as u128 && burning == oracle,
            || format!("{d}: spanning trees {trees}, oracle {oracle}, burning {burning}"),
        )?;
        if d.parts() == [3, 2, 1] {
            ensure(oracle == 4, || format!("(3,2,1) has {oracle}"))?;
        }
        shapes += 1;
    }
    Ok(format!("{shapes} shapes"))
}

fn classification() -> Outcome {
    let mut total = 0;
    for d in diagrams_up_to(8) {
        let g = d.graph();
        let rec: HashSet<Configuration> =
            enumerate_recurrent(&g, DEFAULT_BUDGET).unwrap().into_iter().collect();
        let mut image = HashSet::new();
        for t in enumerate_tableaux(&d) {
            for dt in DecoratedTableau::all_canonical(&t) {
                let c = dt.to_configuration();
                ensure(rec.contains(&c), || format!("{d}: {c} from {} not recurrent", t.to_compact()))?;
                ensure(image.insert(c.clone()), || format!("{d}: {c} reached twice"))?;
            }
        }
        ensure(image.len() == rec.len(), || format!("{d}: {} of {} reached", image.len(), rec.len()))?;
        total += rec.len();
    }
    Ok(format!("{total} recurrent configurations"))
}

fn bijection_square() -> Outcome {
    let mut checked = 0;
    for d in diagrams_up_to(8) {
        let g = d.graph();
        let tableaux = enumerate_tableaux(&d);
        for t in &tableaux {
            let back = g.phi_ct(&t.phi_tc()).map_err(|e| e.to_string())?;
            ensure(back == *t, || format!("{d}: phiCT(phiTC({})) differs", t.to_compact()))?;
        }

        let canonical: usize = tableaux.iter().map(|t| DecoratedTableau::all_canonical(t).len()).sum();
        let rec = enumerate_recurrent(&g, DEFAULT_BUDGET).unwrap();
        let mut psi_image = HashSet::new();
        for c in &rec {
            let dt = g.psi(c).map_err(|e| e.to_string())?;
            ensure(dt.is_canonical() && dt.to_configuration() == *c, || format!("{d}: psi({c})"))?;
            psi_image.insert(dt);
        }
        ensure(psi_image.len() == rec.len() && rec.len() == canonical, || {
            format!("{d}: psi image {} / rec {} / canonical {canonical}", psi_image.len(), rec.len())
        })?;

        let bottoms = &d.labeling().rows()[1..];
        let oracle: BTreeSet<Vec<usize>> = permutations_with_descent_bottoms(g.n(), bottoms, DEFAULT_BUDGET)
            .unwrap()
            .into_iter()
            .collect();
        let perms: BTreeSet<Vec<usize>> =
            tableaux.iter().map(|t| t.to_permutation().letters().to_vec()).collect();
        ensure(perms.len() == tableaux.len() && perms == oracle, || format!("{d}: permutations"))?;

        for c in &rec {
            let dp = g.decorated_permutation(c).map_err(|e| e.to_string())?;
            let tree = IntransitiveTree::from_permutation(&dp).map_err(|e| e.to_string())?;
            ensure(tree.to_permutation() == dp, || format!("{d}: tree round trip on {dp}"))?;
            let ct = g.canon_top(c).unwrap();
            let levels: Vec<BTreeSet<usize>> =
                tree.bfs_levels().into_iter().map(|l| l.into_iter().collect()).collect();
            let blocks: Vec<BTreeSet<usize>> =
                ct.blocks().iter().map(|b| b.iter().copied().collect()).collect();
            ensure(levels == blocks, || format!("{d}: levels of {dp}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} recurrent configurations through all maps"))
}

fn perm_stabilization() -> Outcome {
    const ADDITIONS: usize = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut shapes = 0;
    for d in diagrams_up_to(7) {
        let g = d.graph();
        let rec = enumerate_recurrent(&g, DEFAULT_BUDGET).unwrap();
        let mut c = rec[rng.gen_range(0..rec.len())].clone();
        for _ in 0..ADDITIONS {
            let v = rng.gen_range(1..=g.n());
            let mut bumped = c.heights().to_vec();
            bumped[v - 1] += 1;
            let next = g.stabilize(&Configuration::new(bumped)).unwrap().stable;
            let expected = DecoratedPermutation::from_tableau(&g.psi(&next).unwrap());

            let dp = g.decorated_permutation(&c).unwrap();
            let mut a = dp.decorations().to_vec();
            a[v - 1] += 1;
            let (got, _) = stabilize_perm(&DecoratedPermutation::new(dp.perm().clone(), a).unwrap());
            ensure(got == expected, || {
                format!("{d}: {c} + e{v}: graph {expected}, permutation {got}")
            })?;
            c = if rng.gen_ratio(1, 8) { rec[rng.gen_range(0..rec.len())].clone() } else { next };
        }
        shapes += 1;
    }
    Ok(format!("{shapes} shapes x {ADDITIONS} additions"))
}

fn cornersupports() -> Outcome {
    let mut tableaux = 0;
    for d in diagrams_up_to(8) {
        for t in enumerate_tableaux(&d) {
            ensure(t.cornersupports() == t.cornersupports_definitional(), || {
                format!("{d}: masks differ on {}", t.to_compact())
            })?;
            let s = t.supplementary();
            for (r, &j) in s.row_labels().iter().enumerate() {
                for (x, &k) in s.col_labels().iter().enumerate() {
                    if j > k {
                        let direct = t.supplementary_entry_direct(j, k).map_err(|e| e.to_string())?;
                        ensure(direct == s.at(r, x), || {
                            format!("{d}: S[{j}][{k}] on {}", t.to_compact())
                        })?;
                    }
                }
            }
            tableaux += 1;
        }
    }
    Ok(format!("{tableaux} tableaux"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("1 goldens", goldens, Duration::from_secs(1)),
        ("2 counting identity, s <= 9", counting, Duration::from_secs(60)),
        ("3 classification coverage, s <= 8", classification, Duration::from_secs(60)),
        ("4 bijection square, s <= 8", bijection_square, Duration::from_secs(60)),
        ("5 permutation stabilization equivalence, s <= 7", perm_stabilization, Duration::from_secs(120)),
        ("6 dual cornersupports, s <= 8", cornersupports, Duration::from_secs(60)),
    ];
    let mut ok = true;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed <= limit {
                Ok(msg)
            } else {
                Err(format!("{msg}, but over the {limit:?} limit"))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} ({elapsed:.2?})"),
            Err(msg) => {
                ok = false;
                println!("FAIL criterion {name}: {msg} ({elapsed:.2?})");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
