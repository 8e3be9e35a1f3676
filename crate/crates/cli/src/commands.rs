use std::io::Write;

use rcomp_core::closed_forms::s_rm_diagonal;
use rcomp_core::family::Counter;
use rcomp_core::{enumerate_compositions, EnumerationBudget, Method};
use serde::{Deserialize, Serialize};

use crate::args::{CountArgs, DiagonalArgs, EnumerateArgs, MethodArg, SeriesArgs};
use crate::error::{CliError, CliResult};
use crate::output::Sink;

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CountRecord {
    pub family: String,
    pub n: u64,
    pub method: String,
    pub value: String,
}

pub fn count<W: Write>(args: &CountArgs, sink: &mut Sink<W>) -> CliResult {
    let family = args.params.family(args.family)?;
    let mut counter = Counter::with_budget(EnumerationBudget::new(args.budget));
    let methods: Vec<Method> = match args.method {
        MethodArg::Recurrence => vec![Method::Recurrence],
        MethodArg::Closed => vec![Method::Closed],
        MethodArg::Series => vec![Method::Series],
        MethodArg::Oracle => vec![Method::Oracle],
        MethodArg::All => Method::ALL.to_vec(),
    };
    let several = methods.len() > 1;
    let mut values = Vec::new();
    for method in methods {
        let value = counter.count(family, args.n, method)?;
        let record =
            CountRecord { family: family.to_string(), n: args.n, method: method.to_string(), value: value.to_string() };
        let line = if several { format!("{method} {value}") } else { value.to_string() };
        sink.record(&record, Some(&line))?;
        values.push(value);
    }
    if values.windows(2).any(|w| w[0] != w[1]) {
        return Err(CliError::Mismatch(format!("methods disagree on {family}({})", args.n)));
    }
    Ok(())
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CompositionRecord {
    pub n: u64,
    /// Parts joined with '+'.
    pub parts: String,
}

pub fn enumerate<W: Write>(args: &EnumerateArgs, sink: &mut Sink<W>) -> CliResult {
    let family = args.params.family(args.family)?;
    let constraint = family.constraint()?;
    let all = enumerate_compositions(args.n, &constraint, EnumerationBudget::new(args.budget))?;
    let limit = args.limit.unwrap_or(u64::MAX);
    for comp in all.take(usize::try_from(limit).unwrap_or(usize::MAX)) {
        let comp = comp?;
        let parts = comp.parts().iter().map(u64::to_string).collect::<Vec<_>>().join("+");
        sink.record(&CompositionRecord { n: args.n, parts }, Some(&comp.to_string()))?;
    }
    Ok(())
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoefficientRecord {
    pub n: u64,
    pub value: String,
}

pub fn series<W: Write>(args: &SeriesArgs, sink: &mut Sink<W>) -> CliResult {
    let family = args.params.family(args.family)?;
    let values = Counter::new().values(family, args.order, Method::Series)?;
    for (i, v) in values.iter().enumerate() {
        let record = CoefficientRecord { n: i as u64 + 1, value: v.to_string() };
        let line = format!("{} {v}", record.n);
        sink.record(&record, args.bfile.then_some(line.as_str()))?;
    }
    if !args.bfile {
        let line = values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        sink.plain_line(&line)?;
    }
    Ok(())
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DiagonalRecord {
    /// Index of the term, or "sum" for the total.
    pub lambda: String,
    pub row: Option<u64>,
    pub col: Option<u64>,
    pub value: String,
}

pub fn diagonal<W: Write>(args: &DiagonalArgs, sink: &mut Sink<W>) -> CliResult {
    let (total, terms) = s_rm_diagonal(args.n, args.r, args.m)?;
    for t in &terms {
        let record = DiagonalRecord {
            lambda: t.lambda.to_string(),
            row: Some(t.row),
            col: Some(t.col),
            value: t.value.to_string(),
        };
        sink.record(&record, Some(&format!("C({},{})={}", t.row, t.col, t.value)))?;
    }
    let sum_line = if terms.is_empty() {
        total.to_string()
    } else {
        let addends = terms.iter().map(|t| t.value.to_string()).collect::<Vec<_>>().join("+");
        format!("{addends}={total}")
    };
    let record = DiagonalRecord { lambda: "sum".into(), row: None, col: None, value: total.to_string() };
    sink.record(&record, Some(&sum_line))
}
