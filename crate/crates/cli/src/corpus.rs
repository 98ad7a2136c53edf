//! Batch runs over a directory of `.lrs` and `.poly` inputs.

use std::fmt::Write as _;
use std::io;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use skolem_core::CancelToken;

use crate::{exit, run_command, Command, PolyArg, Report, Settings, SkolemArgs};

/// One processed input.
#[derive(Debug, Clone)]
pub struct Entry {
    pub input: PathBuf,
    pub output: PathBuf,
    pub exit_code: i32,
}

#[derive(Debug, Clone, Default)]
pub struct Summary {
    pub entries: Vec<Entry>,
}

impl Summary {
    pub fn render(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            writeln!(s, "{}\t{}\t{}", e.exit_code, e.input.display(), e.output.display()).unwrap();
        }
        s
    }
}

fn command_for(path: &Path) -> Option<Command> {
    match path.extension()?.to_str()? {
        "lrs" => Some(Command::Skolem(SkolemArgs { file: path.to_path_buf(), search: 1000 })),
        "poly" => Some(Command::Analyze(PolyArg { polynomial: path.display().to_string() })),
        _ => None,
    }
}

/// Inputs in `dir`, sorted by file name.
pub fn corpus_inputs(dir: &Path) -> io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && command_for(p).is_some())
        .collect();
    files.sort();
    Ok(files)
}

/// Runs every input in `dir` and writes one report per input into `out`.
pub fn run_corpus(dir: &Path, out: &Path, json: bool, settings: Settings, cancel: &CancelToken) -> io::Result<Summary> {
    let files = corpus_inputs(dir)?;
    std::fs::create_dir_all(out)?;
    let entries = files
        .par_iter()
        .map(|path| {
            let cmd = command_for(path).expect("filtered by extension");
            let report = catch_unwind(AssertUnwindSafe(|| run_command(&cmd, settings, cancel)));
            let name = path.file_name().expect("file path").to_string_lossy();
            let output = out.join(format!("{name}.{}", if json { "json" } else { "txt" }));
            let (code, body) = match report {
                Ok(r) => (r.exit_code(), render(&r, json)),
                Err(_) => (exit::INTERNAL, "error (Internal): analysis panicked\n".to_string()),
            };
            std::fs::write(&output, body)?;
            Ok(Entry { input: path.clone(), output, exit_code: code })
        })
        .collect::<io::Result<Vec<_>>>()?;
    Ok(Summary { entries })
}

fn render(r: &Report, json: bool) -> String {
    if json {
        r.to_json_string() + "\n"
    } else {
        r.text()
    }
}
