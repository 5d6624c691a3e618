#![allow(dead_code)]

use std::path::PathBuf;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use simplicity::generation::{Bounds, GenerationModel};
use simplicity::knowledge::{BeliefBase, Proposition};
use simplicity::Bits;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

/// Grid value standing for "no finite cost".
pub const INF: u8 = 9;
const GRID_MAX: u8 = 8;

pub fn grid_bits(v: u8) -> Bits {
    if v == INF {
        Bits::INFINITY
    } else {
        Bits::from(u32::from(v))
    }
}

/// A random belief base together with the raw ingredients it was built
/// from, so that an independent oracle can recompute its bounds.
pub struct RandomKb {
    pub kb: BeliefBase,
    pub literals: Vec<Proposition>,
    /// Literal rules as index pairs into `literals`.
    pub literal_rules: Vec<(usize, usize)>,
    pub cheapest: Vec<u8>,
    pub floor: Vec<u8>,
    pub literal_only: bool,
}

pub fn random_kb(rng: &mut ChaCha8Rng) -> RandomKb {
    let atoms = rng.gen_range(1..=6);
    let literals: Vec<Proposition> = (0..atoms)
        .flat_map(|i| {
            let a = Proposition::atom(format!("p{i}"));
            [a.clone(), Proposition::not(a)]
        })
        .collect();
    let n = literals.len();
    let literal_only = rng.gen_bool(0.6);

    let mut kb = BeliefBase::new();
    let mut cheapest = vec![INF; n];
    let mut floor = vec![0u8; n];
    for (i, lit) in literals.iter().enumerate() {
        for _ in 0..2 {
            if rng.gen_bool(0.35) {
                let k = rng.gen_range(0..=GRID_MAX);
                cheapest[i] = cheapest[i].min(k);
                kb = kb.with_scenario(lit.clone(), GenerationModel::fixed(f64::from(k)));
            }
        }
        if rng.gen_bool(0.08) {
            let k = rng.gen_range(1..=GRID_MAX);
            floor[i] = k;
            kb = kb.with_bounds(lit.clone(), Bounds::at_least(grid_bits(k))).unwrap();
        }
    }

    let mut literal_rules = Vec::new();
    for _ in 0..rng.gen_range(0..=2 * n) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        literal_rules.push((a, b));
        kb = kb.with_rule(literals[a].clone(), literals[b].clone());
    }

    if !literal_only {
        for _ in 0..rng.gen_range(1..=4) {
            let compound = random_compound(rng, &literals);
            let other = literals[rng.gen_range(0..n)].clone();
            kb = match rng.gen_range(0..3) {
                0 => kb.with_rule(compound, other),
                1 => kb.with_rule(other, compound),
                _ => kb.with_scenario(compound, GenerationModel::fixed(f64::from(rng.gen_range(0..=GRID_MAX)))),
            };
        }
    }

    RandomKb {
        kb,
        literals,
        literal_rules,
        cheapest,
        floor,
        literal_only,
    }
}

pub fn random_compound(rng: &mut ChaCha8Rng, literals: &[Proposition]) -> Proposition {
    let mut pick = || literals[rng.gen_range(0..literals.len())].clone();
    let (x, y) = (pick(), pick());
    match rng.gen_range(0..3) {
        0 => Proposition::or(x, y),
        1 => Proposition::and(x, y),
        _ => Proposition::implies(x, y),
    }
}

/// Range of generation costs a literal can take over every grid
/// assignment that respects the rules, their contrapositives, the
/// cheapest known scenarios (as ceilings) and the asserted floors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub min: u8,
    pub max: u8,
}

fn implication_edges(r: &RandomKb) -> Vec<(usize, usize)> {
    // K(a) >= K(b) for each edge (a, b); literal i and i ^ 1 are negations
    let mut edges = Vec::new();
    for &(a, b) in &r.literal_rules {
        edges.push((a, b));
        edges.push((b ^ 1, a ^ 1));
    }
    edges
}

/// Enumerates every assignment over the grid `{0..=8, ∞}`. `None` when no
/// assignment satisfies every constraint. Exponential; keep to a handful of
/// literals.
pub fn grid_ranges(r: &RandomKb) -> Option<Vec<Range>> {
    let n = r.literals.len();
    let edges = implication_edges(r);
    let base = u32::from(INF) + 1;
    let mut ranges: Vec<Option<Range>> = vec![None; n];
    let mut k = vec![0u8; n];
    for mut code in 0..base.pow(n as u32) {
        for v in k.iter_mut() {
            *v = (code % base) as u8;
            code /= base;
        }
        let fits =
            (0..n).all(|i| k[i] >= r.floor[i] && k[i] <= r.cheapest[i]) && edges.iter().all(|&(a, b)| k[a] >= k[b]);
        if !fits {
            continue;
        }
        for i in 0..n {
            let range = ranges[i].get_or_insert(Range { min: k[i], max: k[i] });
            range.min = range.min.min(k[i]);
            range.max = range.max.max(k[i]);
        }
    }
    ranges.into_iter().collect()
}

/// The same ranges read off implication paths: a literal costs at least
/// every floor it leads to and at most every route into it.
pub fn path_ranges(r: &RandomKb) -> Option<Vec<Range>> {
    let n = r.literals.len();
    let edges = implication_edges(r);
    let reach = |start: usize| {
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            if !std::mem::replace(&mut seen[i], true) {
                stack.extend(edges.iter().filter(|e| e.0 == i).map(|e| e.1));
            }
        }
        seen
    };
    let closure: Vec<Vec<bool>> = (0..n).map(reach).collect();
    let ranges: Vec<Range> = (0..n)
        .map(|x| Range {
            min: (0..n).filter(|&z| closure[x][z]).map(|z| r.floor[z]).max().unwrap_or(0),
            max: (0..n)
                .filter(|&y| closure[y][x])
                .map(|y| r.cheapest[y])
                .min()
                .unwrap_or(INF),
        })
        .collect();
    ranges.iter().all(|g| g.min <= g.max).then_some(ranges)
}

#[derive(Debug, Default)]
pub struct LawStats {
    pub kbs: usize,
    pub or_checks: usize,
    pub rule_checks: usize,
    pub oracle_matches: usize,
    pub inconsistent: usize,
}

/// Generates `count` seeded random belief bases and checks, for each:
/// disjunction costs the cheaper side; after propagation every rule
/// `a ⊃ b` has `lower(a) >= lower(b)` and `M(a) >= M(b)`; and on literal
/// kbs the propagated table equals the oracle ranges.
pub fn check_logic_laws(seed: u64, count: usize) -> Result<LawStats, String> {
    use rand::SeedableRng;
    use simplicity::generation::{
        mutability_inheritance_check, propagate_bounds, scenario_complexity, GenerationError,
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stats = LawStats::default();
    for k in 0..count {
        let r = random_kb(&mut rng);
        stats.kbs += 1;

        for _ in 0..4 {
            let x = r.literals[rng.gen_range(0..r.literals.len())].clone();
            let y = r.literals[rng.gen_range(0..r.literals.len())].clone();
            let either = Proposition::or(x.clone(), y.clone());
            if !r.kb.scenarios_for(&either).is_empty() {
                continue;
            }
            let expected = scenario_complexity(&r.kb, &x).min(scenario_complexity(&r.kb, &y));
            let got = scenario_complexity(&r.kb, &either);
            if got != expected {
                return Err(format!("kb {k}: C_w({either}) = {got}, expected {expected}"));
            }
            stats.or_checks += 1;
        }

        let oracle = if r.literal_only {
            let paths = path_ranges(&r);
            if r.literals.len() <= 4 && grid_ranges(&r) != paths {
                return Err(format!("kb {k}: path oracle disagrees with grid enumeration"));
            }
            Some(paths)
        } else {
            None
        };
        match propagate_bounds(&r.kb, &Default::default()) {
            Ok(table) => {
                for rule in r.kb.rules() {
                    let (a, b) = (table.get(&rule.antecedent), table.get(&rule.consequent));
                    if a.lower.value() + 1e-9 < b.lower.value() {
                        return Err(format!("kb {k}: lower bound not inherited along {rule:?}"));
                    }
                    let m = |p: &Proposition| -table.get(&p.negated()).upper.value();
                    if m(&rule.antecedent) < m(&rule.consequent) {
                        return Err(format!("kb {k}: mutability not inherited along {rule:?}"));
                    }
                    stats.rule_checks += 1;
                }
                if !mutability_inheritance_check(&r.kb).is_empty() {
                    return Err(format!("kb {k}: inheritance check reports violations"));
                }
                match oracle {
                    Some(None) => return Err(format!("kb {k}: oracle finds no assignment, propagation does")),
                    Some(Some(ranges)) => {
                        for (i, lit) in r.literals.iter().enumerate() {
                            let b = table.get(lit);
                            let want = Bounds {
                                lower: grid_bits(ranges[i].min),
                                upper: grid_bits(ranges[i].max),
                            };
                            if b != want {
                                return Err(format!("kb {k}: {lit} propagated to {b:?}, oracle {want:?}"));
                            }
                        }
                        stats.oracle_matches += 1;
                    }
                    None => {}
                }
            }
            Err(GenerationError::InconsistentBounds(violations)) => {
                if violations.is_empty() {
                    return Err(format!("kb {k}: empty violation list"));
                }
                if let Some(Some(_)) = oracle {
                    return Err(format!(
                        "kb {k}: oracle finds an assignment, propagation reports {violations:?}"
                    ));
                }
                if oracle.is_some() {
                    stats.oracle_matches += 1;
                }
                stats.inconsistent += 1;
            }
            Err(e) => return Err(format!("kb {k}: {e}")),
        }
    }
    Ok(stats)
}

/// Round trip, length law and canonical order of the positional code for
/// every rank up to `max`.
pub fn check_codec(max: u64) -> Result<(), String> {
    use simplicity::codec::{code_length, decode, encode_rank, Rank};

    let mut previous: Option<Vec<bool>> = None;
    for r in 0..=max {
        let word = encode_rank(Rank(r));
        let expected_len = 63 - (r + 1).leading_zeros() as usize;
        if word.len() != expected_len {
            return Err(format!(
                "rank {r}: length {} != floor(log2(r+1)) = {expected_len}",
                word.len()
            ));
        }
        if code_length(Rank(r)).value() != expected_len as f64 {
            return Err(format!("rank {r}: code_length disagrees with the word"));
        }
        match decode(&word) {
            Ok(Rank(back)) if back == r => {}
            other => return Err(format!("rank {r}: decodes to {other:?}")),
        }
        // shorter words first, then lexicographic: strictly increasing, hence injective
        if let Some(prev) = &previous {
            let bits = word.bits();
            if !(prev.len() < bits.len() || (prev.len() == bits.len() && prev.as_slice() < bits)) {
                return Err(format!("rank {r}: word {word} out of canonical order"));
            }
        }
        previous = Some(word.bits().to_vec());
    }
    Ok(())
}

pub struct CliRun {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI in-process.
pub fn cli(args: &[&str]) -> CliRun {
    cli_with_stdin(args, "")
}

pub fn cli_with_stdin(args: &[&str], stdin: &str) -> CliRun {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("simplicity").chain(args.iter().copied());
    let status = simplicity::cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    CliRun {
        code: status.code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}
