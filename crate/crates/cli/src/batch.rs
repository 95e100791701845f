//! `reduce --dir`: one worker per instance, stats aggregated into a CSV.

use std::fs;
use std::path::{Path, PathBuf};

use hymis::ReducerConfig;
use rayon::prelude::*;
use serde::Serialize;

use crate::{exit, files, reduce_file, CliError};

pub const THREADS_VAR: &str = "HYMIS_THREADS";

#[derive(Serialize)]
struct Row<'a> {
    instance: &'a str,
    n: usize,
    m: usize,
    e: f64,
    n_r: usize,
    m_r: usize,
    e_r: f64,
    t: f64,
    offset: usize,
    timed_out: bool,
}

fn instances(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let mut found = Vec::new();
    for entry in fs::read_dir(dir).map_err(|e| CliError::io(dir, e))? {
        let path = entry.map_err(|e| CliError::io(dir, e))?.path();
        if path.is_file() && path.extension().is_some_and(|x| x == "hgr") {
            found.push(path);
        }
    }
    found.sort();
    Ok(found)
}

fn thread_count() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_VAR) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError {
                code: exit::OTHER,
                message: format!("{THREADS_VAR} must be a positive integer, got `{v}`"),
            }),
        },
    }
}

/// Reduces every `*.hgr` in `dir` into `out_dir`, writing `<stem>.hgr`, `.map`,
/// `.trace.jsonl`, `.stats.json` per instance and `stats.csv` over all of them.
/// Failing instances are reported and skipped; the first failure decides the exit code.
pub fn run(dir: &Path, out_dir: &Path, cfg: &ReducerConfig) -> Result<(), CliError> {
    let inputs = instances(dir)?;
    fs::create_dir_all(out_dir).map_err(|e| CliError::io(out_dir, e))?;
    if out_dir.canonicalize().ok() == dir.canonicalize().ok() {
        return Err(CliError {
            code: exit::OTHER,
            message: "output directory must differ from the input directory".into(),
        });
    }

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_count()? {
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(|e| CliError {
        code: exit::OTHER,
        message: e.to_string(),
    })?;

    let outcomes: Vec<_> = pool.install(|| {
        inputs
            .par_iter()
            .map(|input| {
                let stem = input.file_stem().unwrap_or_default();
                let out = out_dir.join(stem).with_extension("hgr");
                let trace = files::sibling(&out, "trace.jsonl");
                let stats = files::sibling(&out, "stats.json");
                reduce_file(input, cfg, &out, &trace, &stats)
            })
            .collect()
    });

    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut first_error = None;
    let mut reduced = 0;
    for (input, outcome) in inputs.iter().zip(outcomes) {
        match outcome {
            Ok(s) => {
                let name = input.file_name().unwrap_or_default().to_string_lossy();
                writer
                    .serialize(Row {
                        instance: &name,
                        n: s.n,
                        m: s.m,
                        e: s.e,
                        n_r: s.n_r,
                        m_r: s.m_r,
                        e_r: s.e_r,
                        t: s.t,
                        offset: s.offset,
                        timed_out: s.timed_out,
                    })
                    .expect("csv row");
                reduced += 1;
            }
            Err(e) => {
                eprintln!("hymis: {e}");
                first_error.get_or_insert(e);
            }
        }
    }
    let table = String::from_utf8(writer.into_inner().expect("in-memory csv")).expect("utf-8 csv");
    files::write_atomic(&out_dir.join("stats.csv"), &table)?;
    println!("reduced {reduced} of {} instances", inputs.len());
    match first_error {
        None => Ok(()),
        Some(e) => Err(CliError {
            code: e.code,
            message: format!(
                "{} of {} instances failed",
                inputs.len() - reduced,
                inputs.len()
            ),
        }),
    }
}
