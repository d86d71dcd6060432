//! Command bodies. Each returns the process exit code: 0 for plain output
//! or a passing verdict, 1 for a failing verdict, 2 for budget or usage
//! trouble (usage errors bubble up as anyhow errors and are mapped in main).

use std::time::Instant;

use anyhow::{bail, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde_json::{json, Value};

use minorprime_core::groebner::{intersect_all, is_groebner_basis, saturate};
use minorprime_core::minors::adjacent_minors;
use minorprime_core::multidim::{
    count_22m, enumerate_22m_primes, level_pair_minor, multidim_symmetry_orbit, prime_22m_ideal,
};
use minorprime_core::partitions::{
    enumerate_prime_partitions, grid_symmetry_classes, partition_to_ideal,
};
use minorprime_core::sequences::{
    build_poset, count_prime_sequences, enumerate_prime_sequences, matrix_to_sequence, phi,
    sample_phi_point, sequence_to_ideal,
};
use minorprime_core::minors::multidim_adjacent_minors;
use minorprime_core::{
    Error, Field, Ideal, Monomial, MonomialIdeal, MonomialOrder, Polynomial, PrimeField,
    PrimeSequence, Rationals, Ring, Shape, VarId,
};

use crate::output::{self, Report, Verdict};

const DEFAULT_BUDGET: usize = 1_000_000;

/// S-pair cap for every Buchberger run, overridable via the environment.
pub fn pair_budget() -> Result<usize> {
    match std::env::var("MINORPRIME_BUDGET") {
        Ok(v) => {
            let parsed = v
                .trim()
                .parse::<usize>()
                .with_context(|| format!("MINORPRIME_BUDGET={v:?} is not a pair count"))?;
            if parsed == 0 {
                bail!("MINORPRIME_BUDGET must be positive");
            }
            Ok(parsed)
        }
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// Coefficient field selection: 0 means the rationals, anything else a prime.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CharSpec {
    Zero,
    Prime(u64),
}

impl CharSpec {
    pub fn from_flag(value: u64) -> CharSpec {
        if value == 0 {
            CharSpec::Zero
        } else {
            CharSpec::Prime(value)
        }
    }

    pub fn value(self) -> u64 {
        match self {
            CharSpec::Zero => 0,
            CharSpec::Prime(p) => p,
        }
    }
}

/// Flags shared by every command.
#[derive(Clone, Copy)]
pub struct Ctx {
    pub json: bool,
    pub charspec: CharSpec,
    pub budget: usize,
}

/// Runs the core computation of a checking command and prints its report.
/// A budget overrun is a verdict, not an error; anything else bubbles up.
fn report_outcome(
    task: &'static str,
    inputs: Value,
    ctx: Ctx,
    body: impl FnOnce() -> Result<(Verdict, Vec<String>), Error>,
) -> Result<i32> {
    let started = Instant::now();
    let (verdict, witnesses) = match body() {
        Ok(pair) => pair,
        Err(Error::BudgetExceeded { pairs }) => (
            Verdict::BudgetExceeded,
            vec![format!("computation budget exceeded after {pairs} S-pairs")],
        ),
        Err(e) => return Err(e.into()),
    };
    let report = Report {
        task,
        inputs,
        verdict,
        witnesses,
        characteristic: ctx.charspec.value(),
        elapsed_ms: started.elapsed().as_millis(),
    };
    report.print(ctx.json);
    Ok(verdict.exit_code())
}

fn print_ideal<F: Field>(ring: &Ring<F>, ideal: &Ideal<F>, ctx: Ctx, cas: bool) -> i32 {
    if cas {
        for line in output::generator_strings(ring, ideal) {
            println!("{line}");
        }
    } else {
        output::print_value(&output::ideal_json(ring, ideal, ctx.charspec.value()));
    }
    0
}

pub fn ideal_adjacent(ctx: Ctx, m: u16, n: u16, k: u16, cas: bool) -> Result<i32> {
    fn body<F: Field>(field: F, ctx: Ctx, m: u16, n: u16, k: u16, cas: bool) -> Result<i32> {
        let ring = Ring::grid(m, n, field)?;
        let gens = adjacent_minors(&ring, k)?;
        let ideal = Ideal::new(ring.clone(), gens)?;
        Ok(print_ideal(&ring, &ideal, ctx, cas))
    }
    match ctx.charspec {
        CharSpec::Zero => body(Rationals, ctx, m, n, k, cas),
        CharSpec::Prime(p) => body(PrimeField::new(p)?, ctx, m, n, k, cas),
    }
}

pub fn ideal_pgamma(ctx: Ctx, m: u16, n: u16, gamma: &str, cas: bool) -> Result<i32> {
    let gamma = parse_sequence(m, n, gamma)?;
    fn body<F: Field>(field: F, ctx: Ctx, gamma: &PrimeSequence, cas: bool) -> Result<i32> {
        let ring = Ring::grid(gamma.m(), gamma.n(), field)?;
        let ideal = sequence_to_ideal(&ring, gamma)?;
        Ok(print_ideal(&ring, &ideal, ctx, cas))
    }
    match ctx.charspec {
        CharSpec::Zero => body(Rationals, ctx, &gamma, cas),
        CharSpec::Prime(p) => body(PrimeField::new(p)?, ctx, &gamma, cas),
    }
}

pub fn ideal_multidim(ctx: Ctx, shape: &str, cas: bool) -> Result<i32> {
    let axes = output::parse_shape(shape)?;
    fn body<F: Field>(field: F, ctx: Ctx, axes: &[u16], cas: bool) -> Result<i32> {
        let ring = Ring::new(Shape::multi(axes), field)?;
        let gens = multidim_adjacent_minors(&ring)?;
        let ideal = Ideal::new(ring.clone(), gens)?;
        Ok(print_ideal(&ring, &ideal, ctx, cas))
    }
    match ctx.charspec {
        CharSpec::Zero => body(Rationals, ctx, &axes, cas),
        CharSpec::Prime(p) => body(PrimeField::new(p)?, ctx, &axes, cas),
    }
}

pub fn partitions_enumerate(
    ctx: Ctx,
    rows: u16,
    cols: u16,
    classes: bool,
    ideals: bool,
) -> Result<i32> {
    let ps = enumerate_prime_partitions(rows, cols)?;
    let class_of: Option<Vec<usize>> = if classes {
        let orbits = grid_symmetry_classes(&ps)?;
        let mut lookup = vec![0usize; ps.len()];
        for (c, members) in orbits.iter().enumerate() {
            for &i in members {
                lookup[i] = c;
            }
        }
        Some(lookup)
    } else {
        None
    };
    let generators: Option<Vec<Vec<String>>> = if ideals {
        fn gens_for<F: Field>(
            field: F,
            rows: u16,
            cols: u16,
            ps: &[minorprime_core::GridPartition],
        ) -> Result<Vec<Vec<String>>> {
            let ring = Ring::grid(rows, cols, field)?;
            ps.iter()
                .map(|p| {
                    let ideal = partition_to_ideal(&ring, p)?;
                    Ok(output::generator_strings(&ring, &ideal))
                })
                .collect()
        }
        Some(match ctx.charspec {
            CharSpec::Zero => gens_for(Rationals, rows, cols, &ps)?,
            CharSpec::Prime(p) => gens_for(PrimeField::new(p)?, rows, cols, &ps)?,
        })
    } else {
        None
    };

    let mut items = Vec::with_capacity(ps.len());
    for (i, p) in ps.iter().enumerate() {
        let mut item = output::partition_json(p)?;
        let map = item.as_object_mut().unwrap();
        if let Some(class_of) = &class_of {
            map.insert("class".into(), json!(class_of[i]));
        }
        if let Some(generators) = &generators {
            map.insert("generators".into(), json!(generators[i]));
        }
        items.push(item);
    }
    let n_classes = class_of.as_ref().map(|c| c.iter().max().map_or(0, |&m| m + 1));

    if ctx.json {
        let mut doc = json!({
            "cols": cols,
            "partitions": items,
            "rows": rows,
            "total": ps.len(),
        });
        if let Some(k) = n_classes {
            doc.as_object_mut().unwrap().insert("classes".into(), json!(k));
        }
        output::print_value(&doc);
    } else {
        for item in &items {
            let map = item.as_object().unwrap();
            let mut line = format!("s={} rectangles={}", map["s"], map["rectangles"]);
            if let Some(c) = map.get("class") {
                line.push_str(&format!(" class={c}"));
            }
            if let Some(g) = map.get("generators") {
                line.push_str(&format!(" generators={g}"));
            }
            println!("{line}");
        }
        match n_classes {
            Some(k) => println!("total={} classes={}", ps.len(), k),
            None => println!("total={}", ps.len()),
        }
    }
    Ok(0)
}

pub fn sequences_enumerate(ctx: Ctx, m: u16, n: u16) -> Result<i32> {
    let gammas = enumerate_prime_sequences(m, n)?;
    if ctx.json {
        let items: Vec<Value> = gammas
            .iter()
            .map(|g| {
                let intervals: Vec<Value> =
                    g.intervals().iter().map(|iv| json!([iv.a, iv.b])).collect();
                json!({ "gamma": output::format_gamma(g), "intervals": intervals })
            })
            .collect();
        output::print_value(&json!({
            "m": m,
            "n": n,
            "sequences": items,
            "total": gammas.len(),
        }));
    } else {
        for g in &gammas {
            println!("{}", output::format_gamma(g));
        }
    }
    Ok(0)
}

pub fn sequences_count(ctx: Ctx, m: u16, n: u16) -> Result<i32> {
    let count = count_prime_sequences(m, n)?;
    if ctx.json {
        output::print_value(&json!({
            "count": count.to_string(),
            "m": m,
            "n": n,
        }));
    } else {
        println!("{count}");
    }
    Ok(0)
}

pub fn poset_cmd(_ctx: Ctx, m: u16, n: u16, gamma: &str) -> Result<i32> {
    let gamma = parse_sequence(m, n, gamma)?;
    let poset = build_poset(&gamma)?;
    let nodes: Vec<Value> = poset
        .nodes()
        .iter()
        .map(|node| {
            json!({
                "d": node.d,
                "interval": [node.interval.a, node.interval.b],
                "k": node.k,
                "left_child": node.left_child,
                "left_parent": node.left_parent,
                "right_child": node.right_child,
                "right_parent": node.right_parent,
                "row": node.row,
            })
        })
        .collect();
    output::print_value(&json!({
        "ell": poset.ell(),
        "gamma": output::format_gamma(&gamma),
        "m": m,
        "n": n,
        "nodes": nodes,
        "rows": poset.rows(),
    }));
    Ok(0)
}

pub fn phi_sample(ctx: Ctx, m: u16, n: u16, gamma: &str, seed: u64) -> Result<i32> {
    let gamma = parse_sequence(m, n, gamma)?;
    let poset = build_poset(&gamma)?;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let point = sample_phi_point(&poset, &mut rng);
    let x = phi(&poset, &point)?;
    if ctx.json {
        let mut doc = output::matrix_json(&x);
        let map = doc.as_object_mut().unwrap();
        map.insert("gamma".into(), json!(output::format_gamma(&gamma)));
        map.insert("seed".into(), json!(seed));
        output::print_value(&doc);
    } else {
        println!("{}", output::matrix_plain(&x));
    }
    Ok(0)
}

pub fn gamma_from_matrix(ctx: Ctx, path: &str) -> Result<i32> {
    let raw = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    let value: Value = serde_json::from_str(&raw).with_context(|| format!("parsing {path}"))?;
    let x = output::matrix_from_json(&value)?;
    let started = Instant::now();
    match matrix_to_sequence(&x) {
        Ok(gamma) => {
            if ctx.json {
                let intervals: Vec<Value> =
                    gamma.intervals().iter().map(|iv| json!([iv.a, iv.b])).collect();
                output::print_value(&json!({
                    "gamma": output::format_gamma(&gamma),
                    "intervals": intervals,
                    "m": gamma.m(),
                    "n": gamma.n(),
                }));
            } else {
                println!("{}", output::format_gamma(&gamma));
            }
            Ok(0)
        }
        Err(Error::BadMatrix(msg)) => {
            let report = Report {
                task: "gamma-from-matrix",
                inputs: json!({ "matrix": path }),
                verdict: Verdict::Fail,
                witnesses: vec![format!("bad matrix: {msg}")],
                characteristic: 0,
                elapsed_ms: started.elapsed().as_millis(),
            };
            report.print(ctx.json);
            Ok(1)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn gb_check(ctx: Ctx, m: u16, n: u16, gamma: Option<&str>) -> Result<i32> {
    let gammas = match gamma {
        Some(text) => vec![parse_sequence(m, n, text)?],
        None => enumerate_prime_sequences(m, n)?,
    };
    let inputs = match gamma {
        Some(text) => json!({ "gamma": text, "m": m, "n": n }),
        None => json!({ "m": m, "n": n }),
    };
    fn body<F: Field>(
        field: F,
        m: u16,
        n: u16,
        gammas: &[PrimeSequence],
    ) -> Result<(Verdict, Vec<String>), Error> {
        let ring = Ring::grid(m, n, field)?;
        let ord = MonomialOrder::diaglex(&ring);
        for gamma in gammas {
            let ideal = sequence_to_ideal(&ring, gamma)?;
            let label = output::format_gamma(gamma);
            if !is_groebner_basis(ring.field(), &ord, ideal.generators())? {
                return Ok((
                    Verdict::Fail,
                    vec![format!("generators for {label} are not a Groebner basis")],
                ));
            }
            let leading: Result<Vec<Monomial>, Error> = ideal
                .generators()
                .iter()
                .map(|g| Ok(g.resorted(&ord).leading_monomial()?.clone()))
                .collect();
            if !MonomialIdeal::new(leading?).is_squarefree() {
                return Ok((
                    Verdict::Fail,
                    vec![format!("initial ideal for {label} is not squarefree")],
                ));
            }
        }
        Ok((Verdict::Pass, Vec::new()))
    }
    report_outcome("gb-check", inputs, ctx, || match ctx.charspec {
        CharSpec::Zero => body(Rationals, m, n, &gammas),
        CharSpec::Prime(p) => body(PrimeField::new(p)?, m, n, &gammas),
    })
}

pub fn verify_decomposition(ctx: Ctx, m: u16, n: u16) -> Result<i32> {
    let inputs = json!({ "m": m, "n": n });
    fn body<F: Field>(
        field: F,
        m: u16,
        n: u16,
        budget: usize,
    ) -> Result<(Verdict, Vec<String>), Error> {
        let ring = Ring::grid(m, n, field)?;
        let ord = MonomialOrder::diaglex(&ring);
        let target = Ideal::new(ring.clone(), adjacent_minors(&ring, m)?)?;
        let gammas = enumerate_prime_sequences(m, n)?;
        let components: Vec<Ideal<F>> = gammas
            .iter()
            .map(|g| sequence_to_ideal(&ring, g))
            .collect::<Result<_, _>>()?;
        let intersection = intersect_all(&components, budget)?;
        if !intersection.ideal_equal(&target, &ord, budget)? {
            return Ok((
                Verdict::Fail,
                vec![
                    "intersection of the sequence ideals differs from the adjacent minor ideal"
                        .into(),
                ],
            ));
        }
        if let Some(witness) = containment_witness(&components, &gammas, &ord, budget)? {
            return Ok((Verdict::Fail, vec![witness]));
        }
        Ok((Verdict::Pass, Vec::new()))
    }
    report_outcome("verify-decomposition", inputs, ctx, || match ctx.charspec {
        CharSpec::Zero => body(Rationals, m, n, ctx.budget),
        CharSpec::Prime(p) => body(PrimeField::new(p)?, m, n, ctx.budget),
    })
}

/// First ordered pair with one component inside another, as a witness line.
fn containment_witness<F: Field>(
    ideals: &[Ideal<F>],
    gammas: &[PrimeSequence],
    ord: &MonomialOrder,
    budget: usize,
) -> Result<Option<String>, Error> {
    for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            if i != j && a.contained_in(b, ord, budget)? {
                return Ok(Some(format!(
                    "ideal for {} is contained in the ideal for {}",
                    output::format_gamma(&gammas[i]),
                    output::format_gamma(&gammas[j]),
                )));
            }
        }
    }
    Ok(None)
}

/// Like containment_witness, for ideals labeled by arbitrary strings.
fn labeled_containment_witness<F: Field>(
    ideals: &[Ideal<F>],
    labels: &[String],
    ord: &MonomialOrder,
    budget: usize,
) -> Result<Option<String>, Error> {
    for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            if i != j && a.contained_in(b, ord, budget)? {
                return Ok(Some(format!(
                    "ideal {} is contained in ideal {}",
                    labels[i], labels[j],
                )));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Sequences,
    Partitions,
    Multidim,
}

pub fn verify_incomparable(
    ctx: Ctx,
    family: Family,
    m: Option<u16>,
    n: Option<u16>,
    shape: Option<&str>,
) -> Result<i32> {
    fn grid_args(m: Option<u16>, n: Option<u16>) -> Result<(u16, u16)> {
        Ok((
            m.context("this family needs -m")?,
            n.context("this family needs -n")?,
        ))
    }
    match family {
        Family::Sequences => {
            let (m, n) = grid_args(m, n)?;
            let inputs = json!({ "family": "sequences", "m": m, "n": n });
            fn body<F: Field>(
                field: F,
                m: u16,
                n: u16,
                budget: usize,
            ) -> Result<(Verdict, Vec<String>), Error> {
                let ring = Ring::grid(m, n, field)?;
                let ord = MonomialOrder::diaglex(&ring);
                let gammas = enumerate_prime_sequences(m, n)?;
                let ideals: Vec<Ideal<F>> = gammas
                    .iter()
                    .map(|g| sequence_to_ideal(&ring, g))
                    .collect::<Result<_, _>>()?;
                match containment_witness(&ideals, &gammas, &ord, budget)? {
                    Some(w) => Ok((Verdict::Fail, vec![w])),
                    None => Ok((Verdict::Pass, Vec::new())),
                }
            }
            report_outcome("verify-incomparable", inputs, ctx, || match ctx.charspec {
                CharSpec::Zero => body(Rationals, m, n, ctx.budget),
                CharSpec::Prime(p) => body(PrimeField::new(p)?, m, n, ctx.budget),
            })
        }
        Family::Partitions => {
            let (m, n) = grid_args(m, n)?;
            let inputs = json!({ "family": "partitions", "m": m, "n": n });
            fn body<F: Field>(
                field: F,
                m: u16,
                n: u16,
                budget: usize,
            ) -> Result<(Verdict, Vec<String>), Error> {
                let ring = Ring::grid(m, n, field)?;
                let ord = MonomialOrder::diaglex(&ring);
                let ps = enumerate_prime_partitions(m, n)?;
                let ideals: Vec<Ideal<F>> = ps
                    .iter()
                    .map(|p| partition_to_ideal(&ring, p))
                    .collect::<Result<_, _>>()?;
                let labels: Vec<String> =
                    ps.iter().map(|p| output::cells_json(p.support()).to_string()).collect();
                match labeled_containment_witness(&ideals, &labels, &ord, budget)? {
                    Some(w) => Ok((Verdict::Fail, vec![w])),
                    None => Ok((Verdict::Pass, Vec::new())),
                }
            }
            report_outcome("verify-incomparable", inputs, ctx, || match ctx.charspec {
                CharSpec::Zero => body(Rationals, m, n, ctx.budget),
                CharSpec::Prime(p) => body(PrimeField::new(p)?, m, n, ctx.budget),
            })
        }
        Family::Multidim => {
            let shape = shape.context("this family needs --shape")?;
            let axes = check_22m_axes(&output::parse_shape(shape)?)?;
            let inputs = json!({ "family": "multidim", "shape": shape });
            fn body<F: Field>(
                field: F,
                axes: &[u16],
                budget: usize,
            ) -> Result<(Verdict, Vec<String>), Error> {
                let ring = Ring::new(Shape::multi(axes), field)?;
                let ord = MonomialOrder::diaglex(&ring);
                let primes = enumerate_22m_primes(axes.len(), axes[axes.len() - 1])?;
                let ideals: Vec<Ideal<F>> = primes
                    .iter()
                    .map(|p| prime_22m_ideal(&ring, p, budget))
                    .collect::<Result<_, _>>()?;
                let labels: Vec<String> = primes.iter().map(|p| support_label(p)).collect();
                match labeled_containment_witness(&ideals, &labels, &ord, budget)? {
                    Some(w) => Ok((Verdict::Fail, vec![w])),
                    None => Ok((Verdict::Pass, Vec::new())),
                }
            }
            report_outcome("verify-incomparable", inputs, ctx, || match ctx.charspec {
                CharSpec::Zero => body(Rationals, &axes, ctx.budget),
                CharSpec::Prime(p) => body(PrimeField::new(p)?, &axes, ctx.budget),
            })
        }
    }
}

fn support_label(prime: &minorprime_core::Prime22m) -> String {
    let parts: Vec<String> = prime
        .support()
        .iter()
        .map(|index| {
            index.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
        })
        .collect();
    if parts.is_empty() {
        "{}".into()
    } else {
        format!("{{{}}}", parts.join(";"))
    }
}

fn check_22m_axes(axes: &[u16]) -> Result<Vec<u16>> {
    if axes.len() < 2 || axes[..axes.len() - 1].iter().any(|&a| a != 2) {
        bail!("shape must be 2,...,2,m");
    }
    Ok(axes.to_vec())
}

pub fn verify_saturation(ctx: Ctx, shape: &str) -> Result<i32> {
    let axes = check_22m_axes(&output::parse_shape(shape)?)?;
    let inputs = json!({ "shape": shape });
    fn body<F: Field>(
        field: F,
        axes: &[u16],
        budget: usize,
    ) -> Result<(Verdict, Vec<String>), Error> {
        let ring = Ring::new(Shape::multi(axes), field)?;
        let ord = MonomialOrder::diaglex(&ring);
        let field = ring.field().clone();
        let minors = multidim_adjacent_minors(&ring)?;
        let ideal = Ideal::new(ring.clone(), minors.clone())?;
        let all_vars: Vec<(VarId, u16)> =
            (0..ring.num_vars()).map(|v| (VarId(v as u16), 1)).collect();
        let product = Polynomial::from_terms(
            &field,
            &ord,
            vec![(field.one(), Monomial::from_pairs(&all_vars))],
        );
        let saturated = saturate(&ideal, &product, budget)?;
        let m = axes[axes.len() - 1];
        let mut extended = minors;
        for j in 1..=m {
            for jp in (j + 2)..=m {
                extended.push(level_pair_minor(&ring, j, jp)?);
            }
        }
        let expected = Ideal::new(ring.clone(), extended)?;
        if saturated.ideal_equal(&expected, &ord, budget)? {
            Ok((Verdict::Pass, Vec::new()))
        } else {
            Ok((
                Verdict::Fail,
                vec![
                    "saturation by the coordinate product differs from the minors \
                     plus all distant level minors"
                        .into(),
                ],
            ))
        }
    }
    report_outcome("verify-saturation", inputs, ctx, || match ctx.charspec {
        CharSpec::Zero => body(Rationals, &axes, ctx.budget),
        CharSpec::Prime(p) => body(PrimeField::new(p)?, &axes, ctx.budget),
    })
}

pub fn invariants(ctx: Ctx, m: u16, n: u16, codim: bool, degree: bool) -> Result<i32> {
    let (want_codim, want_degree) = if codim || degree { (codim, degree) } else { (true, true) };
    fn initial<F: Field>(field: F, m: u16, n: u16, budget: usize) -> Result<MonomialIdeal> {
        let ring = Ring::grid(m, n, field)?;
        let ord = MonomialOrder::diaglex(&ring);
        let ideal = Ideal::new(ring.clone(), adjacent_minors(&ring, m)?)?;
        Ok(ideal.initial_ideal(&ord, budget)?)
    }
    let init = match ctx.charspec {
        CharSpec::Zero => initial(Rationals, m, n, ctx.budget)?,
        CharSpec::Prime(p) => initial(PrimeField::new(p)?, m, n, ctx.budget)?,
    };
    if ctx.json {
        let mut doc = json!({ "m": m, "n": n });
        let map = doc.as_object_mut().unwrap();
        if want_codim {
            map.insert("codim".into(), json!(init.codim()));
        }
        if want_degree {
            map.insert("degree".into(), json!(init.degree().to_string()));
        }
        output::print_value(&doc);
    } else {
        let mut parts = Vec::new();
        if want_codim {
            parts.push(format!("codim={}", init.codim()));
        }
        if want_degree {
            parts.push(format!("degree={}", init.degree()));
        }
        println!("{}", parts.join(" "));
    }
    Ok(0)
}

pub fn multidim_primes(ctx: Ctx, shape: &str) -> Result<i32> {
    let axes = check_22m_axes(&output::parse_shape(shape)?)?;
    let primes = enumerate_22m_primes(axes.len(), axes[axes.len() - 1])?;
    fn gens_for<F: Field>(
        field: F,
        axes: &[u16],
        primes: &[minorprime_core::Prime22m],
        budget: usize,
    ) -> Result<Vec<Vec<String>>> {
        let ring = Ring::new(Shape::multi(axes), field)?;
        primes
            .iter()
            .map(|p| {
                let ideal = prime_22m_ideal(&ring, p, budget)?;
                Ok(output::generator_strings(&ring, &ideal))
            })
            .collect()
    }
    let generators = match ctx.charspec {
        CharSpec::Zero => gens_for(Rationals, &axes, &primes, ctx.budget)?,
        CharSpec::Prime(p) => gens_for(PrimeField::new(p)?, &axes, &primes, ctx.budget)?,
    };
    if ctx.json {
        let items: Vec<Value> = primes
            .iter()
            .zip(&generators)
            .map(|(p, gens)| {
                let support: Vec<Vec<u16>> = p.support().into_iter().collect();
                json!({ "generators": gens, "support": support })
            })
            .collect();
        output::print_value(&json!({
            "axes": axes,
            "primes": items,
            "total": primes.len(),
        }));
    } else {
        for p in &primes {
            println!("support={}", support_label(p));
        }
        println!("total={}", primes.len());
    }
    Ok(0)
}

pub fn multidim_count(ctx: Ctx, d: usize, m: u16) -> Result<i32> {
    let count = count_22m(d, m)?;
    if ctx.json {
        output::print_value(&json!({
            "count": count.to_string(),
            "d": d,
            "m": m,
        }));
    } else {
        println!("{count}");
    }
    Ok(0)
}

pub fn multidim_orbits(ctx: Ctx, shape: &str, set: &str) -> Result<i32> {
    let axes = output::parse_shape(shape)?;
    let support = output::parse_index_set(set)?;
    let orbit = multidim_symmetry_orbit(&axes, &support)?;
    if ctx.json {
        let items: Vec<Value> = orbit
            .iter()
            .map(|s| {
                let indices: Vec<Vec<u16>> = s.iter().cloned().collect();
                json!(indices)
            })
            .collect();
        output::print_value(&json!({
            "orbit": items,
            "shape": axes,
            "size": orbit.len(),
        }));
    } else {
        for s in &orbit {
            let parts: Vec<String> = s
                .iter()
                .map(|index| {
                    index.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
                })
                .collect();
            println!("{}", parts.join(";"));
        }
        println!("size={}", orbit.len());
    }
    Ok(0)
}

fn parse_sequence(m: u16, n: u16, gamma: &str) -> Result<PrimeSequence> {
    let pairs = output::parse_gamma(gamma)?;
    Ok(PrimeSequence::new(m, n, &pairs)?)
}
