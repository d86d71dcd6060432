//! Serialization shared by the commands: JSON builders with stable sorted
//! keys, the plain-text twins, and the little grammars for intervals,
//! shapes, and index sets given on the command line.

use std::collections::BTreeSet;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use minorprime_core::text;
use minorprime_core::{
    BigRational, Field, GridPartition, Ideal, NumericMatrix, PrimeSequence, Ring, Shape,
};

/// "0-3,2-5,4-7" -> [(0,3),(2,5),(4,7)]. Interval ends joined by a dash,
/// intervals joined by commas.
pub fn parse_gamma(input: &str) -> Result<Vec<(u16, u16)>> {
    let mut out = Vec::new();
    for part in input.split(',') {
        let (a, b) = part
            .trim()
            .split_once('-')
            .with_context(|| format!("interval {part:?} is not of the form a-b"))?;
        out.push((
            a.trim().parse().with_context(|| format!("bad interval start {a:?}"))?,
            b.trim().parse().with_context(|| format!("bad interval end {b:?}"))?,
        ));
    }
    Ok(out)
}

pub fn format_gamma(gamma: &PrimeSequence) -> String {
    let parts: Vec<String> =
        gamma.intervals().iter().map(|iv| format!("{}-{}", iv.a, iv.b)).collect();
    parts.join(",")
}

/// "2,2,3" -> [2,2,3].
pub fn parse_shape(input: &str) -> Result<Vec<u16>> {
    let axes: Vec<u16> = input
        .split(',')
        .map(|part| part.trim().parse().with_context(|| format!("bad axis {part:?}")))
        .collect::<Result<_>>()?;
    if axes.len() < 2 {
        bail!("a shape needs at least two axes");
    }
    Ok(axes)
}

/// "1,2,1;1,2,2" -> {[1,2,1],[1,2,2]}. The empty string is the empty set.
pub fn parse_index_set(input: &str) -> Result<BTreeSet<Vec<u16>>> {
    let mut out = BTreeSet::new();
    if input.trim().is_empty() {
        return Ok(out);
    }
    for part in input.split(';') {
        let index: Vec<u16> = part
            .split(',')
            .map(|c| c.trim().parse().with_context(|| format!("bad index {part:?}")))
            .collect::<Result<_>>()?;
        out.insert(index);
    }
    Ok(out)
}

pub fn ring_json<F: Field>(ring: &Ring<F>, characteristic: u64) -> Value {
    match ring.shape() {
        Shape::Grid { rows, cols } => json!({
            "characteristic": characteristic,
            "cols": cols,
            "kind": "grid",
            "rows": rows,
        }),
        Shape::Multi(axes) => json!({
            "axes": axes,
            "characteristic": characteristic,
            "kind": "multi",
        }),
    }
}

pub fn generator_strings<F: Field>(ring: &Ring<F>, ideal: &Ideal<F>) -> Vec<String> {
    ideal.generators().iter().map(|g| text::print(ring, g)).collect()
}

pub fn ideal_json<F: Field>(ring: &Ring<F>, ideal: &Ideal<F>, characteristic: u64) -> Value {
    json!({
        "generators": generator_strings(ring, ideal),
        "ring": ring_json(ring, characteristic),
    })
}

pub fn matrix_json(x: &NumericMatrix) -> Value {
    let rows: Vec<Vec<String>> = (0..x.rows())
        .map(|i| (0..x.cols()).map(|j| x.get(i, j).to_string()).collect())
        .collect();
    json!({
        "cols": x.cols(),
        "matrix": rows,
        "rows": x.rows(),
    })
}

pub fn matrix_plain(x: &NumericMatrix) -> String {
    (0..x.rows())
        .map(|i| {
            (0..x.cols()).map(|j| x.get(i, j).to_string()).collect::<Vec<_>>().join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Accepts either a bare array of rows or an object with a "matrix" field,
/// entries being rational strings ("3/7") or integers.
pub fn matrix_from_json(value: &Value) -> Result<NumericMatrix> {
    let rows_value = match value {
        Value::Object(map) => map.get("matrix").context("object has no \"matrix\" field")?,
        other => other,
    };
    let rows = rows_value.as_array().context("matrix must be an array of rows")?;
    let mut parsed: Vec<Vec<BigRational>> = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row.as_array().context("each row must be an array")?;
        let mut out = Vec::with_capacity(row.len());
        for entry in row {
            out.push(rational_from_json(entry)?);
        }
        parsed.push(out);
    }
    Ok(NumericMatrix::from_rows(parsed)?)
}

fn rational_from_json(entry: &Value) -> Result<BigRational> {
    match entry {
        Value::String(s) => {
            s.trim().parse().map_err(|e| anyhow::anyhow!("bad rational {s:?}: {e:?}"))
        }
        Value::Number(n) => {
            let i = n.as_i64().with_context(|| format!("entry {n} is not an integer"))?;
            Ok(BigRational::from_integer(i.into()))
        }
        other => bail!("matrix entry {other} is neither a string nor an integer"),
    }
}

pub fn cells_json(cells: &BTreeSet<(u16, u16)>) -> Value {
    Value::Array(cells.iter().map(|&(i, j)| json!([i, j])).collect())
}

pub fn partition_json(p: &GridPartition) -> Result<Value> {
    let rects: Vec<Value> = p
        .rectangles()?
        .iter()
        .map(|r| json!([r.top, r.left, r.bottom, r.right]))
        .collect();
    Ok(json!({
        "rectangles": rects,
        "s": cells_json(p.support()),
    }))
}

pub fn print_value(value: &Value) {
    println!("{value}");
}

/// The verdict of a checking command, with exit semantics attached.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail,
    BudgetExceeded,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::BudgetExceeded => "budget-exceeded",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::BudgetExceeded => 2,
        }
    }
}

pub struct Report {
    pub task: &'static str,
    pub inputs: Value,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
    pub characteristic: u64,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "characteristic": self.characteristic,
            "elapsed_ms": self.elapsed_ms,
            "inputs": self.inputs,
            "task": self.task,
            "verdict": self.verdict.as_str(),
            "witnesses": self.witnesses,
        })
    }

    pub fn plain(&self) -> String {
        let mut fields = vec![format!("task={}", self.task)];
        if let Value::Object(map) = &self.inputs {
            for (k, v) in map {
                fields.push(format!("{k}={v}"));
            }
        }
        fields.push(format!("char={}", self.characteristic));
        fields.push(format!("verdict={}", self.verdict.as_str()));
        fields.push(format!("elapsed_ms={}", self.elapsed_ms));
        let mut out = fields.join(" ");
        for w in &self.witnesses {
            out.push_str("\nwitness: ");
            out.push_str(w);
        }
        out
    }

    pub fn print(&self, json_mode: bool) {
        if json_mode {
            print_value(&self.to_json());
        } else {
            println!("{}", self.plain());
        }
    }
}
