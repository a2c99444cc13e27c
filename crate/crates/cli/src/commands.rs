use std::fmt::Write as _;

use num_bigint::BigInt;
use patternhom::closed_forms::{count_avoiders_closed_form, resolve};
use patternhom::roots::smallest_positive_root;
use patternhom::{
    antichain_reduce, count_avoiders_via_chains, count_avoiders_via_clusters, enumerate_chains,
    enumerate_clusters, gs_defect, gs_kernel, list_chains, list_clusters, lower_bound_from_root,
    self_overlaps, ChainTable, Error, GsKernelPoly, Oracle, PatternSet, Permutation, Result,
};
use serde_json::{json, Value};

use crate::{BoundArgs, CountArgs, EquivArgs, GlobalOpts, Method, Mode, OverlapArgs, TableArgs};

/// Everything a command produces besides timing.
pub struct Outcome {
    pub patterns: Option<String>,
    pub method: Option<String>,
    pub params: Value,
    pub result: Value,
    pub notices: Vec<String>,
    pub pretty: String,
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidInput(_) => "invalid_input",
        Error::Parse { .. } => "parse",
        Error::GuardExceeded { .. } => "guard_exceeded",
        Error::NoRoot { .. } => "no_root",
    }
}

/// Parses a pattern set, reducing it to an antichain when asked.
fn parse_set(text: &str, reduce: bool, notices: &mut Vec<String>) -> Result<PatternSet> {
    if !reduce {
        return text.parse();
    }
    let raw = text
        .split(';')
        .map(str::parse)
        .collect::<Result<Vec<Permutation>>>()?;
    let count = raw.len();
    let set = antichain_reduce(raw)?;
    if set.len() < count {
        notices.push(format!("reduced {count} patterns to the antichain {set}"));
    }
    Ok(set)
}

fn decimal<T: ToString>(values: &[T]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Oracle => "oracle",
        Method::Chains => "chains",
        Method::Clusters => "clusters",
        Method::ClosedForm => "closed-form",
    }
}

pub fn count(args: &CountArgs, global: &GlobalOpts) -> Result<Outcome> {
    let mut notices = Vec::new();
    let set = parse_set(&args.patterns, global.reduce, &mut notices)?;
    let n = args.n;
    let mut used = args.method;
    let mut closed_form = Value::Null;
    let sequence: Vec<String> = match args.method {
        Method::Oracle => decimal(&Oracle::with_guard(global.guard).avoider_sequence(&set, n)?),
        Method::Chains => decimal(&count_avoiders_via_chains(&set, n)?.to_counts()?),
        Method::Clusters => decimal(&count_avoiders_via_clusters(&set, n)?.to_counts()?),
        Method::ClosedForm => match resolve(&set) {
            Some(r) => {
                closed_form = json!({ "form": r.form, "symmetry": r.symmetry });
                if r.symmetry != patternhom::Symmetry::Identity {
                    notices.push(format!(
                        "counted {} via the {} symmetry",
                        r.form.pattern_set(),
                        r.symmetry
                    ));
                }
                decimal(&count_avoiders_closed_form(&r, n)?.to_counts()?)
            }
            None => {
                notices.push(format!(
                    "no closed form recognized for {set}; fell back to chain enumeration"
                ));
                used = Method::Chains;
                decimal(&count_avoiders_via_chains(&set, n)?.to_counts()?)
            }
        },
    };
    let mut pretty = String::from("n\tavoiders\n");
    for (i, a) in sequence.iter().enumerate() {
        let _ = writeln!(pretty, "{i}\t{a}");
    }
    let mut result = json!({ "offset": 0, "sequence": sequence });
    if !closed_form.is_null() {
        result["closed_form"] = closed_form;
    }
    Ok(Outcome {
        patterns: Some(set.to_string()),
        method: Some(method_name(used).into()),
        params: json!({
            "n": n,
            "requested_method": method_name(args.method),
            "guard": global.guard,
            "reduce": global.reduce,
        }),
        result,
        notices,
        pretty,
    })
}

fn table_pretty(table: &ChainTable, label: &str) -> String {
    let mut out = format!("n\t{label}(n, q) for q = 0..n\n");
    for n in 0..=table.n_max {
        let row: Vec<String> = decimal(table.row(n));
        let _ = writeln!(out, "{n}\t{}", row.join(" "));
    }
    out
}

fn table_result(table: &ChainTable) -> Value {
    let totals: Vec<String> = (0..=table.n_max)
        .map(|n| table.total(n).to_string())
        .collect();
    json!({ "table": table, "totals_by_length": totals })
}

pub fn chains(args: &TableArgs, global: &GlobalOpts) -> Result<Outcome> {
    let mut notices = Vec::new();
    let set = parse_set(&args.patterns, global.reduce, &mut notices)?;
    let table = enumerate_chains(&set, args.max_len)?;
    let mut result = table_result(&table);
    let mut pretty = table_pretty(&table, "c");
    if args.list {
        let listing = list_chains(&set, args.max_len)?;
        let _ = writeln!(pretty, "\nchain\tq\tbreakpoints");
        for c in &listing {
            let _ = writeln!(pretty, "{}\t{}\t{:?}", c.perm, c.q, c.breakpoints);
        }
        result["listing"] = listing
            .iter()
            .map(|c| json!({ "perm": c.perm.to_string(), "q": c.q, "breakpoints": c.breakpoints }))
            .collect();
    }
    Ok(Outcome {
        patterns: Some(set.to_string()),
        method: None,
        params: json!({ "max_len": args.max_len, "list": args.list, "reduce": global.reduce }),
        result,
        notices,
        pretty,
    })
}

pub fn clusters(args: &TableArgs, global: &GlobalOpts) -> Result<Outcome> {
    let mut notices = Vec::new();
    let set = parse_set(&args.patterns, global.reduce, &mut notices)?;
    let table = enumerate_clusters(&set, args.max_len)?;
    let mut result = table_result(&table);
    let mut pretty = table_pretty(&table, "cl");
    if args.list {
        let listing = list_clusters(&set, args.max_len)?;
        let _ = writeln!(pretty, "\ncluster\tq\tmarked (start, length)");
        for c in &listing {
            let _ = writeln!(pretty, "{}\t{}\t{:?}", c.perm, c.q, c.marked);
        }
        result["listing"] = listing
            .iter()
            .map(|c| json!({ "perm": c.perm.to_string(), "q": c.q, "marked": c.marked }))
            .collect();
    }
    Ok(Outcome {
        patterns: Some(set.to_string()),
        method: None,
        params: json!({ "max_len": args.max_len, "list": args.list, "reduce": global.reduce }),
        result,
        notices,
        pretty,
    })
}

fn parse_coeffs(text: &str) -> Result<GsKernelPoly> {
    let coeffs = text
        .split(',')
        .map(|c| {
            c.trim().parse::<BigInt>().map_err(|e| Error::Parse {
                what: "kernel coefficient",
                text: c.to_string(),
                reason: e.to_string(),
            })
        })
        .collect::<Result<Vec<BigInt>>>()?;
    GsKernelPoly::from_coeffs(coeffs)
}

pub fn bound(args: &BoundArgs, global: &GlobalOpts) -> Result<Outcome> {
    let mut notices = Vec::new();
    let (set, poly) = match (&args.patterns, &args.kernel_coeffs) {
        (Some(text), _) => {
            let set = parse_set(text, global.reduce, &mut notices)?;
            let poly = gs_kernel(&set);
            (Some(set), poly)
        }
        (None, Some(text)) => (None, parse_coeffs(text)?),
        (None, None) => unreachable!("clap requires one kernel source"),
    };
    let root = smallest_positive_root(&poly, args.tol)?;
    let alpha = root.midpoint();
    let mut result = json!({
        "kernel": poly.to_string(),
        "kernel_coeffs": decimal(poly.coeffs()),
        "alpha": alpha.to_string(),
        "bracket": { "lo": root.lo.to_string(), "hi": root.hi.to_string() },
        "bracket_width": root.width().to_string(),
    });
    let mut pretty = format!(
        "kernel\t{poly}\nalpha\t{alpha:.12}\nbracket\t[{:.15}, {:.15}]\n",
        root.lo, root.hi
    );
    if let Some(n) = args.n {
        let value = lower_bound_from_root(&root, n);
        result["lower_bound"] = json!({
            "n": n,
            "value": value.to_string(),
            "ratio_to_factorial": root.hi.powi(-(n as i32)).to_string(),
        });
        let _ = writeln!(pretty, "bound\ta_{n} >= {value:.6e}");
        if let Some(set) = &set {
            if n <= patternhom::MAX_LEN {
                let defect = decimal(&gs_defect(set, n)?.coeffs);
                let _ = writeln!(pretty, "defect\t{}", defect.join(" "));
                result["defect"] = json!(defect);
            } else {
                notices.push(format!(
                    "defect series omitted: n exceeds the chain engine limit {}",
                    patternhom::MAX_LEN
                ));
            }
        }
    }
    Ok(Outcome {
        patterns: set.map(|s| s.to_string()),
        method: None,
        params: json!({
            "n": args.n,
            "tol": args.tol,
            "kernel_coeffs": args.kernel_coeffs,
            "reduce": global.reduce,
        }),
        result,
        notices,
        pretty,
    })
}

pub fn equiv(args: &EquivArgs, global: &GlobalOpts) -> Result<Outcome> {
    let mut notices = Vec::new();
    let left = parse_set(&args.left, global.reduce, &mut notices)?;
    let right = parse_set(&args.right, global.reduce, &mut notices)?;
    let oracle = Oracle::with_guard(global.guard);
    let (equivalent, counterexample) = match args.mode {
        Mode::Wilf => {
            let o = oracle.wilf_equivalent(&left, &right, args.max_n)?;
            (o.equivalent, o.counterexample.map(|n| json!({ "n": n })))
        }
        Mode::Full => {
            let o = oracle.fully_equivalent(&left, &right, args.max_n)?;
            (
                o.equivalent,
                o.counterexample
                    .map(|(n, k)| json!({ "n": n, "occurrences": k })),
            )
        }
    };
    let mut pretty = format!(
        "{left} vs {right}: equivalent = {equivalent} for n <= {}\n",
        args.max_n
    );
    if let Some(c) = &counterexample {
        let _ = writeln!(pretty, "first difference at {c}");
    }
    let mode = match args.mode {
        Mode::Wilf => "wilf",
        Mode::Full => "full",
    };
    Ok(Outcome {
        patterns: Some(format!("{left} | {right}")),
        method: Some("oracle".into()),
        params: json!({
            "left": left.to_string(),
            "right": right.to_string(),
            "max_n": args.max_n,
            "mode": mode,
            "guard": global.guard,
        }),
        result: json!({ "equivalent": equivalent, "counterexample": counterexample }),
        notices,
        pretty,
    })
}

pub fn overlap(args: &OverlapArgs) -> Result<Outcome> {
    let tau: Permutation = args.pattern.parse()?;
    let profile = self_overlaps(&tau)?;
    let overlaps: Vec<usize> = profile.overlaps.iter().copied().collect();
    let free = profile.is_overlap_free();
    Ok(Outcome {
        patterns: Some(tau.to_string()),
        method: None,
        params: json!({ "pattern": tau.to_string() }),
        result: json!({ "length": tau.len(), "overlaps": overlaps, "overlap_free": free }),
        notices: Vec::new(),
        pretty: format!("overlaps\t{overlaps:?}\noverlap_free\t{free}\n"),
    })
}
