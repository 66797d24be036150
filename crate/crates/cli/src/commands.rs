use std::path::PathBuf;

use epslab_core::asymptotics::{
    amao_grid_in, decomposition_records, epsilon_sequence_in, tabulate, FamilyKind, LimitEstimate,
    RunningEstimate, SequenceRecord, SequenceStore,
};
use epslab_core::verify::{
    check_vm_theorem, run_instance_suite, run_property_suite, CheckReport, InstanceParams,
    PropertySuite, Summary,
};
use epslab_core::{
    decomposition_sequences, estimate_limit, swanson_c_search, swanson_search, AmaoGrid,
    RingHandle, SwansonResult,
};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::instance::{Instance, Params};
use crate::output::{json_opt_ratio, json_ratio, Cell, Report, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Info,
    Epsilon,
    Amao,
    VmCheck,
    Swanson,
    Decompose,
    Verify,
}

/// A rendered result plus the number of failed checks it contains.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub failed: usize,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, failed: 0 }
    }
}

/// Optional on-disk [`SequenceStore`] shared by `epsilon` and `amao`.
pub struct Cache {
    path: Option<PathBuf>,
    pub store: SequenceStore,
}

impl Cache {
    pub fn open(path: Option<PathBuf>) -> CliResult<Self> {
        let store = match &path {
            Some(p) if p.exists() => {
                let text = std::fs::read_to_string(p).map_err(|source| CliError::Io {
                    path: p.display().to_string(),
                    source,
                })?;
                serde_json::from_str(&text)
                    .map_err(|e| CliError::Parse(format!("cache {}: {e}", p.display())))?
            }
            _ => SequenceStore::new(),
        };
        Ok(Cache { path, store })
    }

    pub fn save(&self) -> CliResult<()> {
        if let Some(p) = &self.path {
            let text = serde_json::to_string(&self.store).expect("store serializes");
            std::fs::write(p, text).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?;
        }
        Ok(())
    }
}

pub fn run(command: Command, instance: Option<&Instance>, params: &Params, cache: &mut Cache) -> CliResult<Outcome> {
    if command == Command::Verify {
        return verify(instance, params);
    }
    let inst = instance.ok_or_else(|| CliError::Usage("this command needs an instance file".into()))?;
    Ok(match command {
        Command::Info => info(inst).into(),
        Command::Epsilon => epsilon(inst, params, &mut cache.store)?.into(),
        Command::Amao => amao(inst, params, &mut cache.store)?.into(),
        Command::VmCheck => vm_check(inst, params)?,
        Command::Swanson => swanson(inst, params)?.into(),
        Command::Decompose => decompose(inst, params)?.into(),
        Command::Verify => unreachable!("handled above"),
    })
}

fn header_json(inst: &Instance) -> Value {
    json!({
        "ring": inst.ring.fingerprint(),
        "ideal": inst.ideal.to_string(),
        "d": inst.ring.dimension(),
    })
}

pub fn info(inst: &Instance) -> Report {
    let ring = &inst.ring;
    let nil = ring.nilradical();
    let entries: Vec<(&str, String)> = vec![
        ("ring", ring.fingerprint()),
        ("ideal", inst.ideal.to_string()),
        ("r", ring.arity().to_string()),
        ("dim_R", ring.dimension().to_string()),
        ("nilradical", nil.to_string()),
        ("dim_N", ring.nilradical_dimension_signed().to_string()),
        ("hypothesis", ring.hypothesis_holds().to_string()),
        ("analytically_unramified", ring.is_reduced().to_string()),
    ];
    let mut table = Table::new("ring", &["key", "value"]);
    let mut obj = serde_json::Map::new();
    for (k, v) in &entries {
        table.push(vec![Cell::text(k), Cell::text(v)]);
        obj.insert(k.to_string(), Value::String(v.clone()));
    }
    obj.insert("r".into(), json!(ring.arity()));
    obj.insert("dim_R".into(), json!(ring.dimension()));
    obj.insert("dim_N".into(), json!(ring.nilradical_dimension_signed()));
    obj.insert("hypothesis".into(), json!(ring.hypothesis_holds()));
    obj.insert("analytically_unramified".into(), json!(ring.is_reduced()));
    Report {
        tables: vec![table],
        notes: Vec::new(),
        json: Value::Object(obj),
    }
}

fn sequence_rows(table: &mut Table, records: &[SequenceRecord], running: &[RunningEstimate]) {
    for (rec, est) in records.iter().zip(running) {
        table.push(vec![
            Cell::text(rec.family.label()),
            Cell::opt(rec.n()),
            Cell::opt(rec.m()),
            Cell::opt(rec.k()),
            Cell::text(&rec.length),
            Cell::ratio(&est.naive),
            Cell::opt_ratio(est.finite_diff.as_ref()),
            Cell::opt_ratio(est.richardson.as_ref()),
        ]);
    }
}

fn sequence_json(records: &[SequenceRecord], running: &[RunningEstimate]) -> Value {
    Value::Array(
        records
            .iter()
            .zip(running)
            .map(|(rec, est)| {
                json!({
                    "family": rec.family.label(),
                    "n": rec.n(),
                    "m": rec.m(),
                    "k": rec.k(),
                    "length": rec.length.to_string(),
                    "naive": json_ratio(&est.naive),
                    "finite_diff": json_opt_ratio(est.finite_diff.as_ref()),
                    "richardson": json_opt_ratio(est.richardson.as_ref()),
                })
            })
            .collect(),
    )
}

fn estimate_json(est: &LimitEstimate) -> Value {
    json!({
        "finite_diff": json_ratio(&est.finite_diff),
        "richardson": json_ratio(&est.richardson),
        "naive_last": json_ratio(&est.naive_last),
        "raw_limit": json_ratio(&est.raw_limit()),
        "tail_spread": json_ratio(&est.diagnostics.tail_spread),
        "converged": est.diagnostics.converged,
        "naive_nonincreasing": est.diagnostics.naive_nonincreasing,
        "naive_nondecreasing": est.diagnostics.naive_nondecreasing,
    })
}

fn estimate_note(label: &str, est: &LimitEstimate) -> String {
    use epslab_core::rational::to_fraction_string as f;
    format!(
        "{label}: finite_diff {}, richardson {}, limit of length/n^d {}, tail spread {}, converged {}",
        f(&est.finite_diff),
        f(&est.richardson),
        f(&est.raw_limit()),
        f(&est.diagnostics.tail_spread),
        est.diagnostics.converged
    )
}

struct EpsilonTable {
    table: Table,
    json: Value,
    estimate: Option<LimitEstimate>,
}

fn epsilon_table(inst: &Instance, nmax: u32, store: &mut SequenceStore) -> CliResult<EpsilonTable> {
    let d = inst.ring.dimension();
    let records = epsilon_sequence_in(store, &inst.ideal, nmax)?;
    let running = tabulate(&records, d)?;
    let estimate = estimate_limit(&epslab_core::asymptotics::as_pairs(&records), d).ok();
    let mut table = Table::sequences("epsilon_core");
    sequence_rows(&mut table, &records, &running);
    Ok(EpsilonTable {
        table,
        json: sequence_json(&records, &running),
        estimate,
    })
}

pub fn epsilon(inst: &Instance, params: &Params, store: &mut SequenceStore) -> CliResult<Report> {
    let eps = epsilon_table(inst, params.nmax, store)?;
    let mut json = header_json(inst);
    json["records"] = eps.json;
    json["estimate"] = eps.estimate.as_ref().map_or(Value::Null, estimate_json);
    let notes = match &eps.estimate {
        Some(e) => vec![estimate_note("epsilon", e)],
        None => vec![format!("nmax below d + 2 = {}: no estimate", inst.ring.dimension() + 2)],
    };
    Ok(Report {
        tables: vec![eps.table],
        notes,
        json,
    })
}

fn amao_tables(grid: &AmaoGrid) -> CliResult<(Vec<Table>, Value)> {
    let mut tables = Vec::new();
    let mut rows_json = Vec::new();
    for row in &grid.rows {
        let running = tabulate(&row.inner, grid.d)?;
        let mut table = Table::sequences(format!("amao_inner m={}", row.m));
        sequence_rows(&mut table, &row.inner, &running);
        tables.push(table);
        rows_json.push(json!({
            "m": row.m,
            "records": sequence_json(&row.inner, &running),
            "amao": json_ratio(&row.amao),
            "normalized": json_ratio(&row.normalized),
            "estimate": estimate_json(&row.estimate),
        }));
    }
    // Outer rows: naive holds â(m)/m^d; richardson extrapolates it in m.
    let mut outer = Table::sequences("amao_outer");
    for est in grid.outer_estimates() {
        outer.push(vec![
            Cell::text("amao_outer"),
            Cell::Empty,
            Cell::text(est.index),
            Cell::Empty,
            Cell::Empty,
            Cell::ratio(&est.naive),
            Cell::Empty,
            Cell::opt_ratio(est.richardson.as_ref()),
        ]);
    }
    tables.push(outer);
    let json = json!({
        "rows": rows_json,
        "limit_estimate": json_opt_ratio(grid.limit_estimate().as_ref()),
    });
    Ok((tables, json))
}

fn amao_notes(grid: &AmaoGrid) -> Vec<String> {
    use epslab_core::rational::to_fraction_string as f;
    let mut notes: Vec<String> = grid
        .rows
        .iter()
        .map(|r| format!("m={}: amao {}, amao/m^d {}", r.m, f(&r.amao), f(&r.normalized)))
        .collect();
    if let Some(l) = grid.limit_estimate() {
        notes.push(format!("trend of amao/m^d: {}", f(&l)));
    }
    notes
}

pub fn amao(inst: &Instance, params: &Params, store: &mut SequenceStore) -> CliResult<Report> {
    let grid = amao_grid_in(store, &inst.ideal, params.mmax, params.kmax)?;
    let (tables, grid_json) = amao_tables(&grid)?;
    let mut json = header_json(inst);
    json["amao"] = grid_json;
    Ok(Report {
        tables,
        notes: amao_notes(&grid),
        json,
    })
}

fn check_json(r: &CheckReport) -> Value {
    json!({
        "check": r.check,
        "instance": r.instance,
        "status": r.status.label(),
        "detail": r.detail,
        "witness": r.witness.as_ref().map(|w| w.to_string()),
    })
}

pub fn vm_check(inst: &Instance, params: &Params) -> CliResult<Outcome> {
    let vm = check_vm_theorem(&inst.ideal, params.mmax, params.nmax, params.kmax, &params.tolerance)?;
    let d = inst.ring.dimension();
    let running = tabulate(&vm.epsilon, d)?;
    let mut eps = Table::sequences("epsilon_core");
    sequence_rows(&mut eps, &vm.epsilon, &running);
    let (amao_tables, grid_json) = amao_tables(&vm.grid)?;
    let mut tables = vec![eps];
    tables.extend(amao_tables);
    let mut notes = vec![estimate_note("epsilon", &vm.epsilon_estimate)];
    notes.extend(amao_notes(&vm.grid));
    notes.push(format!("{}: {} ({})", vm.report.check, vm.report.status.label(), vm.report.detail));
    let mut json = header_json(inst);
    json["epsilon"] = json!({
        "records": sequence_json(&vm.epsilon, &running),
        "estimate": estimate_json(&vm.epsilon_estimate),
    });
    json["amao"] = grid_json;
    json["report"] = check_json(&vm.report);
    Ok(Outcome {
        failed: usize::from(vm.report.failed()),
        report: Report { tables, notes, json },
    })
}

fn swanson_row(table: &mut Table, name: &str, r: &SwansonResult) {
    let tops: Vec<String> = r
        .top_degrees
        .iter()
        .map(|t| t.map_or("-".to_string(), |v| v.to_string()))
        .collect();
    table.push(vec![
        Cell::text(name),
        Cell::text(r.constant),
        Cell::text(r.found),
        Cell::text(r.verified_range),
        Cell::text(tops.join(";")),
    ]);
}

pub fn swanson(inst: &Instance, params: &Params) -> CliResult<Report> {
    let b = swanson_search(&inst.ideal, params.nmax, params.bmax)?;
    let c = swanson_c_search(&inst.ideal, params.nmax, params.bmax)?;
    let mut table = Table::new("linear constants", &["search", "constant", "found", "verified_range", "top_degrees"]);
    swanson_row(&mut table, "b", &b);
    swanson_row(&mut table, "c", &c);
    let mut notes = Vec::new();
    for (name, r) in [("b", &b), ("c", &c)] {
        if !r.found {
            notes.push(format!("{name}: no constant up to {} works for n <= {}", r.constant, r.verified_range));
        }
    }
    let mut json = header_json(inst);
    json["b"] = serde_json::to_value(&b).expect("serializable");
    json["c"] = serde_json::to_value(&c).expect("serializable");
    Ok(Report {
        tables: vec![table],
        notes,
        json,
    })
}

pub fn decompose(inst: &Instance, params: &Params) -> CliResult<Report> {
    let d = inst.ring.dimension();
    let rows = decomposition_sequences(&inst.ideal, params.nmax)?;
    let mut tables = Vec::new();
    let mut families = serde_json::Map::new();
    for family in FamilyKind::DECOMPOSITION {
        let records = decomposition_records(&rows, family, d);
        let running = tabulate(&records, d)?;
        let mut table = Table::sequences(family.label());
        sequence_rows(&mut table, &records, &running);
        tables.push(table);
        families.insert(family.label().into(), sequence_json(&records, &running));
    }
    let bad: Vec<u32> = rows
        .iter()
        .filter(|r| !(r.kernel_identity_holds() && r.cokernel_identity_holds()))
        .map(|r| r.n)
        .collect();
    let notes = vec![if bad.is_empty() {
        format!("additivity identities hold for n = 1..={}", params.nmax)
    } else {
        format!("additivity identities FAIL at n = {bad:?}")
    }];
    let mut json = header_json(inst);
    json["families"] = Value::Object(families);
    json["identities_hold"] = json!(bad.is_empty());
    Ok(Report { tables, notes, json })
}

pub fn verify(instance: Option<&Instance>, params: &Params) -> CliResult<Outcome> {
    let reports = match instance {
        Some(inst) => {
            let p = InstanceParams {
                nmax: params.nmax,
                mmax: params.mmax,
                kmax: params.kmax,
                tolerance: params.tolerance.clone(),
            };
            run_instance_suite(&inst.ideal, &p)?
        }
        None => run_property_suite(&PropertySuite::new(params.seed))?,
    };
    let summary = Summary::of(&reports);
    let mut table = Table::new("checks", &["check", "instance", "status", "detail", "witness"]);
    for r in &reports {
        table.push(vec![
            Cell::text(&r.check),
            Cell::text(&r.instance),
            Cell::text(r.status.label()),
            Cell::text(&r.detail),
            Cell::opt(r.witness.as_ref()),
        ]);
    }
    let notes = vec![format!(
        "{} passed, {} failed, {} skipped",
        summary.passed, summary.failed, summary.skipped
    )];
    let json = json!({
        "seed": instance.map_or(Some(params.seed), |_| None),
        "passed": summary.passed,
        "failed": summary.failed,
        "skipped": summary.skipped,
        "checks": reports.iter().map(check_json).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        report: Report {
            tables: vec![table],
            notes,
            json,
        },
        failed: summary.failed,
    })
}
