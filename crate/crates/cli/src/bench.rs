//! Batch runner over a directory of instance files.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::mpsc;

use domset::generate::random_instance;
use domset::serialize_instance;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{self, Problem};
use crate::{load_instance, CliError};

const ORDERS: [usize; 3] = [8, 12, 16];
const DENSITIES: [(f64, &str); 2] = [(0.2, "02"), (0.5, "05")];
const REPLICAS: usize = 2;
const MAX_CAPACITY: usize = 3;

/// Writes the seeded G(n, p) corpus into `dir` and returns the file paths.
pub fn generate_corpus(dir: &Path, seed: u64) -> Result<Vec<PathBuf>, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut paths = Vec::new();
    for n in ORDERS {
        for (p, tag) in DENSITIES {
            for i in 0..REPLICAS {
                let inst = random_instance(n, p, MAX_CAPACITY, &mut rng);
                let path = dir.join(format!("gnp-n{n:02}-p{tag}-{i}.cds"));
                let text = format!("c G({n}, {p}) seed {seed}\n{}", serialize_instance(&inst));
                fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
                paths.push(path);
            }
        }
    }
    Ok(paths)
}

fn instance_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| CliError::io(dir, e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| matches!(p.extension().and_then(|e| e.to_str()), Some("cds" | "graph")))
        .collect();
    files.sort();
    Ok(files)
}

/// Runs every problem on every instance file in `dir` across the rayon pool.
/// Reports reach `out` in (file, problem) order through this thread alone.
pub fn run(dir: &Path, problems: &[Problem], out: &mut impl Write) -> Result<usize, CliError> {
    let jobs: Vec<(PathBuf, Problem)> = instance_files(dir)?
        .into_iter()
        .flat_map(|f| problems.iter().map(move |&p| (f.clone(), p)))
        .collect();
    let total = jobs.len();
    let (tx, rx) = mpsc::channel();

    let mut first_error = None;
    std::thread::scope(|scope| {
        scope.spawn(move || {
            jobs.into_par_iter()
                .enumerate()
                .for_each_with(tx, |tx, (i, (path, problem))| {
                    let line = load_instance(&path)
                        .and_then(|(name, inst)| report::solve(problem, &name, &inst, false))
                        .map(|r| r.to_json());
                    let _ = tx.send((i, line));
                });
        });

        let mut pending = BTreeMap::new();
        let mut next = 0;
        for (i, line) in rx {
            pending.insert(i, line);
            while let Some(line) = pending.remove(&next) {
                next += 1;
                if first_error.is_some() {
                    continue;
                }
                match line {
                    Ok(text) => {
                        if let Err(e) = writeln!(out, "{text}") {
                            first_error = Some(CliError::Output(e.to_string()));
                        }
                    }
                    Err(e) => first_error = Some(e),
                }
            }
        }
    });
    match first_error {
        Some(e) => Err(e),
        None => Ok(total),
    }
}
