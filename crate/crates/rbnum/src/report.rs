//! Reporting and persistence: sweep tables (CSV/JSON), the on-disk result
//! store, and the command-line entry points.
//!
//! Consistency is enforced at the reporting layer: a completed search that
//! disagrees with an applicable closed form, or that falls below the proven
//! lower bound, is surfaced as [`CliError::Mismatch`] (exit code 3) rather
//! than silently reported.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::thread;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::constructions::{
    bounds_report, satisfies_doubling_bounds, staircase_coloring, trailing_zeros_coloring,
};
use crate::model::{
    find_rainbow_solution, BoundsReport, Coloring, Equation, Error, RbResult, SearchStatus,
};
use crate::search::{compute_rb, SearchLimits};

/// Version stamped into store entries; cached results are reused only when
/// it matches, so engine changes invalidate old entries.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

const STORE_SCHEMA_VERSION: u32 = 1;

/// Errors surfaced by the command-line layer, each mapped to an exit code:
/// usage and I/O problems exit 1, invalid input data exits 2, and a
/// formula-versus-search disagreement exits 3.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Validation(String),
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m)
            | CliError::Io(m)
            | CliError::Validation(m)
            | CliError::Mismatch(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

/// Header of the sweep table; one column per [`SweepRow`] field.
pub const CSV_HEADER: &str =
    "n,k,rb_oracle,rb_formula,general_lower,L,extremal_count,status,nodes,time_ms";

/// One sweep output row: the searched value, the applicable closed form, the
/// proven lower bound, and effort counters. Missing values (no closed form,
/// aborted search, extremal count not requested) serialize as empty CSV
/// cells / JSON null.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    /// Exact rainbow number from the search, absent when aborted.
    pub rb_oracle: Option<usize>,
    /// Closed-form value when one applies to this `(n, k)`.
    pub rb_formula: Option<usize>,
    /// Proven lower bound on the rainbow number.
    pub general_lower: usize,
    /// Staircase threshold (first fresh-color position), `k >= 4` only.
    #[serde(rename = "L")]
    pub l: Option<usize>,
    pub extremal_count: Option<u64>,
    pub status: String,
    pub nodes: u64,
    pub time_ms: u64,
}

impl SweepRow {
    pub fn from_result(result: &RbResult) -> Result<SweepRow, Error> {
        let bounds = bounds_report(result.n, result.k)?;
        Ok(SweepRow::build(result, &bounds))
    }

    fn build(result: &RbResult, bounds: &BoundsReport) -> SweepRow {
        SweepRow {
            n: result.n,
            k: result.k,
            rb_oracle: result.rb,
            rb_formula: bounds.formula_value,
            general_lower: bounds.general_lower,
            l: bounds.staircase_threshold,
            extremal_count: result.extremal_count,
            status: result.status.to_string(),
            nodes: result.stats.nodes_visited,
            time_ms: result.stats.wall_time.as_millis() as u64,
        }
    }
}

fn fmt_opt<T: fmt::Display>(value: &Option<T>) -> String {
    value.as_ref().map(T::to_string).unwrap_or_default()
}

/// Render rows as CSV with [`CSV_HEADER`]; byte-deterministic in the row
/// data.
pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    use fmt::Write as _;
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.n,
            r.k,
            fmt_opt(&r.rb_oracle),
            fmt_opt(&r.rb_formula),
            r.general_lower,
            fmt_opt(&r.l),
            fmt_opt(&r.extremal_count),
            r.status,
            r.nodes,
            r.time_ms,
        );
    }
    out
}

/// Render rows as a pretty-printed JSON array (same fields as the CSV).
pub fn rows_to_json(rows: &[SweepRow]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("rows serialize");
    out.push('\n');
    out
}

/// Cross-check one row: a completed search must agree with the applicable
/// closed form and respect the proven lower bound.
pub fn check_row(row: &SweepRow) -> Result<(), CliError> {
    if row.status != SearchStatus::Complete.to_string() {
        return Ok(());
    }
    let rb = row
        .rb_oracle
        .ok_or_else(|| CliError::Validation(format!("row n={} k={}: complete but no value", row.n, row.k)))?;
    if let Some(formula) = row.rb_formula {
        if formula != rb {
            return Err(CliError::Mismatch(format!(
                "n = {}, k = {}: closed form gives {formula} but exhaustive search gives {rb}",
                row.n, row.k
            )));
        }
    }
    if rb < row.general_lower {
        return Err(CliError::Mismatch(format!(
            "n = {}, k = {}: search value {rb} is below the proven lower bound {}",
            row.n, row.k, row.general_lower
        )));
    }
    Ok(())
}

/// One persisted computation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StoreEntry {
    pub n: usize,
    pub k: usize,
    pub engine_version: String,
    pub limits: SearchLimits,
    pub timestamp_unix: u64,
    pub result: RbResult,
}

#[derive(Serialize, Deserialize)]
struct StoreFile {
    schema_version: u32,
    entries: Vec<StoreEntry>,
}

/// JSON-backed store of results keyed by `(n, k)`. Saves are atomic
/// (temp file + rename); an aborted result never replaces a completed one.
pub struct ResultStore {
    path: PathBuf,
    entries: BTreeMap<(usize, usize), StoreEntry>,
}

impl ResultStore {
    /// Load the store, treating a missing file as empty. A corrupt file is
    /// an error; an unknown schema version starts fresh with a warning.
    pub fn load(path: &Path) -> Result<ResultStore, CliError> {
        let entries = match fs::read_to_string(path) {
            Ok(text) => {
                let file: StoreFile = serde_json::from_str(&text).map_err(|e| {
                    CliError::Validation(format!(
                        "result store {} is corrupt: {e}",
                        path.display()
                    ))
                })?;
                if file.schema_version != STORE_SCHEMA_VERSION {
                    eprintln!(
                        "warning: result store {} has schema version {}, expected {}; starting fresh",
                        path.display(),
                        file.schema_version,
                        STORE_SCHEMA_VERSION
                    );
                    Vec::new()
                } else {
                    file.entries
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => Vec::new(),
            Err(e) => {
                return Err(CliError::Io(format!(
                    "cannot read result store {}: {e}",
                    path.display()
                )))
            }
        };
        let mut map = BTreeMap::new();
        for entry in entries {
            map.insert((entry.n, entry.k), entry);
        }
        Ok(ResultStore {
            path: path.to_path_buf(),
            entries: map,
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&StoreEntry> {
        self.entries.get(&(n, k))
    }

    /// A reusable completed result for `(n, k)`: current engine version,
    /// completed search, and an extremal count when the caller needs one.
    pub fn cached(&self, n: usize, k: usize, need_extremal: bool) -> Option<&RbResult> {
        let entry = self.entries.get(&(n, k))?;
        if entry.engine_version != ENGINE_VERSION {
            return None;
        }
        if !entry.result.status.is_complete() {
            return None;
        }
        if need_extremal && entry.result.extremal_count.is_none() {
            return None;
        }
        Some(&entry.result)
    }

    /// Insert a result unless a better entry is already present. Precedence:
    /// entries from other engine versions are always replaced; a completed
    /// result beats an aborted one; between completed results the one
    /// carrying an extremal count wins; between aborted results the better
    /// certified bound wins (ties go to the newcomer).
    pub fn record(&mut self, result: RbResult, limits: &SearchLimits) -> bool {
        let key = (result.n, result.k);
        if let Some(old) = self.entries.get(&key) {
            if old.engine_version == ENGINE_VERSION {
                let old_complete = old.result.status.is_complete();
                let new_complete = result.status.is_complete();
                if old_complete && !new_complete {
                    return false;
                }
                if old_complete
                    && new_complete
                    && old.result.extremal_count.is_some()
                    && result.extremal_count.is_none()
                {
                    return false;
                }
                if !old_complete
                    && !new_complete
                    && result.max_rainbow_free_colors < old.result.max_rainbow_free_colors
                {
                    return false;
                }
            }
        }
        let timestamp_unix = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        self.entries.insert(
            key,
            StoreEntry {
                n: result.n,
                k: result.k,
                engine_version: ENGINE_VERSION.to_string(),
                limits: limits.clone(),
                timestamp_unix,
                result,
            },
        );
        true
    }

    /// Write atomically: serialize to a sibling temp file, then rename over
    /// the store path.
    pub fn save(&self) -> Result<(), CliError> {
        let file = StoreFile {
            schema_version: STORE_SCHEMA_VERSION,
            entries: self.entries.values().cloned().collect(),
        };
        let mut text = serde_json::to_string_pretty(&file).expect("store serializes");
        text.push('\n');
        let tmp = sibling_path(&self.path, ".tmp");
        fs::write(&tmp, text).map_err(|e| {
            CliError::Io(format!("cannot write result store {}: {e}", tmp.display()))
        })?;
        fs::rename(&tmp, &self.path).map_err(|e| {
            CliError::Io(format!(
                "cannot move result store into place at {}: {e}",
                self.path.display()
            ))
        })
    }
}

fn sibling_path(path: &Path, suffix: &str) -> PathBuf {
    let mut os = path.as_os_str().to_os_string();
    os.push(suffix);
    PathBuf::from(os)
}

/// Exclusive advisory lock on a store, held for the duration of a command.
/// Implemented as a `create_new` lock file removed on drop.
pub struct StoreLock {
    path: PathBuf,
}

impl StoreLock {
    pub fn acquire(store_path: &Path) -> Result<StoreLock, CliError> {
        StoreLock::acquire_with(store_path, 50, Duration::from_millis(100))
    }

    fn acquire_with(
        store_path: &Path,
        attempts: u32,
        delay: Duration,
    ) -> Result<StoreLock, CliError> {
        let path = sibling_path(store_path, ".lock");
        for attempt in 0..attempts {
            match fs::OpenOptions::new()
                .write(true)
                .create_new(true)
                .open(&path)
            {
                Ok(mut file) => {
                    let _ = writeln!(file, "{}", std::process::id());
                    return Ok(StoreLock { path });
                }
                Err(e) if e.kind() == io::ErrorKind::AlreadyExists => {
                    if attempt + 1 < attempts {
                        thread::sleep(delay);
                    }
                }
                Err(e) => {
                    return Err(CliError::Io(format!(
                        "cannot create lock file {}: {e}",
                        path.display()
                    )))
                }
            }
        }
        Err(CliError::Validation(format!(
            "result store is locked by another process (lock file {} exists)",
            path.display()
        )))
    }
}

impl Drop for StoreLock {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.path);
    }
}

/// Store-related command-line switches.
#[derive(Debug, Clone)]
pub struct StoreOptions {
    pub path: PathBuf,
    /// False disables reading and writing entirely.
    pub enabled: bool,
    /// Delete any existing store file before this command touches it.
    pub reset: bool,
}

/// Construction selector for the `construct` command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionKind {
    TrailingZeros,
    Staircase,
}

impl ConstructionKind {
    fn name(self) -> &'static str {
        match self {
            ConstructionKind::TrailingZeros => "trailing-zeros",
            ConstructionKind::Staircase => "staircase",
        }
    }
}

/// Output format selector for the `sweep` command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

fn equation(k: usize) -> Result<Equation, CliError> {
    Equation::new(k).map_err(|e| CliError::Usage(e.to_string()))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}"))),
    }
}

fn join_spaced(values: &[usize]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_result(result: &RbResult, row: &SweepRow, cached: bool) {
    println!("n = {}  k = {}", result.n, result.k);
    println!("status = {}", result.status);
    match result.rb {
        Some(rb) => println!("rb = {rb}"),
        None => println!(
            "rb = unknown (search aborted); certified: rb >= {}",
            result.max_rainbow_free_colors + 1
        ),
    }
    println!(
        "max rainbow-free colors = {}",
        result.max_rainbow_free_colors
    );
    println!("witness = {}", result.witness);
    println!("witness classes = {}", result.witness.classes_string());
    let canonical = result.witness.canonicalize();
    if let Ok(occ) = canonical.first_occurrences() {
        println!("witness first occurrences = {}", join_spaced(&occ));
    }
    if let Some(count) = result.extremal_count {
        println!("extremal colorings = {count}");
    }
    match row.rb_formula {
        Some(formula) => {
            let verdict = match result.rb {
                Some(rb) if rb == formula => "agrees",
                Some(_) => "DISAGREES",
                None => "not comparable (aborted)",
            };
            println!("closed-form rb = {formula} [{verdict}]");
        }
        None => println!("closed-form rb = none for this (n, k)"),
    }
    println!("proven lower bound = {}", row.general_lower);
    if let Some(l) = row.l {
        println!("staircase threshold = {l}");
    }
    println!(
        "nodes = {}  prunes: rainbow = {}, bound = {}",
        result.stats.nodes_visited, result.stats.prunes_by_rainbow, result.stats.prunes_by_bound
    );
    println!("time = {} ms", result.stats.wall_time.as_millis());
    println!("source = {}", if cached { "store (cached)" } else { "computed" });
}

/// `rb` command: compute (or fetch) the rainbow number for one `(n, k)`,
/// print a human-readable report, persist the result, and cross-check it.
pub fn run_rb(
    n: usize,
    k: usize,
    limits: &SearchLimits,
    store: &StoreOptions,
    enumerate_extremal: bool,
) -> Result<(), CliError> {
    let eq = equation(k)?;
    let mut effective = limits.clone();
    effective.enumerate_all_extremal = enumerate_extremal;
    let (result, cached) = if store.enabled {
        let _lock = StoreLock::acquire(&store.path)?;
        if store.reset {
            let _ = fs::remove_file(&store.path);
        }
        let mut stored = ResultStore::load(&store.path)?;
        match stored.cached(n, k, enumerate_extremal) {
            Some(hit) => (hit.clone(), true),
            None => {
                let fresh = compute_rb(n, eq, &effective)?;
                if stored.record(fresh.clone(), &effective) {
                    stored.save()?;
                }
                (fresh, false)
            }
        }
    } else {
        (compute_rb(n, eq, &effective)?, false)
    };
    let row = SweepRow::from_result(&result)?;
    print_result(&result, &row, cached);
    check_row(&row)
}

/// `construct` command: emit a construction's coloring in the text file
/// format, to `--out` or stdout; the summary goes to stderr.
pub fn run_construct(
    n: usize,
    k: usize,
    kind: ConstructionKind,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let eq = equation(k)?;
    let coloring = match kind {
        ConstructionKind::TrailingZeros => {
            if k != 3 {
                return Err(CliError::Usage(
                    "the trailing-zeros construction applies to the three-variable equation only (k = 3)"
                        .into(),
                ));
            }
            trailing_zeros_coloring(n)
        }
        ConstructionKind::Staircase => staircase_coloring(n, k),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    write_output(out, &coloring.to_text())?;
    eprintln!(
        "constructed {} coloring: n = {}, colors = {}, rainbow-free = {}",
        kind.name(),
        n,
        coloring.color_count(),
        find_rainbow_solution(&coloring, eq).is_none()
    );
    Ok(())
}

/// `verify` command: parse a coloring file, report its structure, and decide
/// whether it is rainbow-free for the chosen equation. Finding a rainbow
/// solution is a reported outcome, not an error.
pub fn run_verify(path: &Path, k: usize) -> Result<(), CliError> {
    let eq = equation(k)?;
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let coloring = Coloring::from_text(&text)?;
    println!("file = {}", path.display());
    println!("n = {}  r = {}", coloring.n(), coloring.color_count());
    println!("exact coloring = true");
    println!("canonical = {}", coloring.is_canonical());
    let canonical = coloring.canonicalize();
    if !coloring.is_canonical() {
        println!("canonical form = {canonical}");
    }
    let occ = canonical.first_occurrences()?;
    println!("first occurrences = {}", join_spaced(&occ));
    if k == 3 {
        let doubling = satisfies_doubling_bounds(&canonical)?;
        println!(
            "first-occurrence doubling = {}",
            if doubling { "satisfied" } else { "violated" }
        );
    }
    match find_rainbow_solution(&coloring, eq) {
        None => println!("rainbow-free = true"),
        Some(solution) => {
            println!("rainbow-free = false");
            println!("rainbow solution = {solution}");
        }
    }
    Ok(())
}

/// `sweep` command: per-`n` results over an inclusive range, emitted as CSV
/// or JSON. Rows are cached individually; the output is written before any
/// mismatch aborts the process, so partial data is never lost.
#[allow(clippy::too_many_arguments)]
pub fn run_sweep(
    n_min: usize,
    n_max: usize,
    k: usize,
    limits: &SearchLimits,
    format: OutputFormat,
    out: Option<&Path>,
    store: &StoreOptions,
    enumerate_extremal: bool,
) -> Result<(), CliError> {
    let eq = equation(k)?;
    let mut effective = limits.clone();
    effective.enumerate_all_extremal = enumerate_extremal;
    let mut results: Vec<(RbResult, bool)> = Vec::new();
    if store.enabled {
        let _lock = StoreLock::acquire(&store.path)?;
        if store.reset {
            let _ = fs::remove_file(&store.path);
        }
        let mut stored = ResultStore::load(&store.path)?;
        let mut dirty = false;
        for n in n_min..=n_max {
            match stored.cached(n, k, enumerate_extremal) {
                Some(hit) => results.push((hit.clone(), true)),
                None => {
                    let fresh = compute_rb(n, eq, &effective)?;
                    dirty |= stored.record(fresh.clone(), &effective);
                    results.push((fresh, false));
                }
            }
        }
        if dirty {
            stored.save()?;
        }
    } else {
        for n in n_min..=n_max {
            results.push((compute_rb(n, eq, &effective)?, false));
        }
    }
    let rows = results
        .iter()
        .map(|(r, _)| SweepRow::from_result(r))
        .collect::<Result<Vec<_>, _>>()?;
    let cached = results.iter().filter(|(_, c)| *c).count();
    let text = match format {
        OutputFormat::Csv => rows_to_csv(&rows),
        OutputFormat::Json => rows_to_json(&rows),
    };
    write_output(out, &text)?;
    eprintln!(
        "swept n = {n_min}..={n_max} for k = {k}: {} rows ({cached} cached)",
        rows.len()
    );
    for row in &rows {
        check_row(row)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::SearchStats;

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    fn computed(n: usize, k: usize, enumerate: bool) -> RbResult {
        let mut l = limits();
        l.enumerate_all_extremal = enumerate;
        compute_rb(n, Equation::new(k).unwrap(), &l).unwrap()
    }

    fn fixed_row() -> SweepRow {
        SweepRow {
            n: 9,
            k: 4,
            rb_oracle: Some(8),
            rb_formula: Some(8),
            general_lower: 8,
            l: Some(4),
            extremal_count: Some(1),
            status: "complete".into(),
            nodes: 1234,
            time_ms: 7,
        }
    }

    #[test]
    fn row_from_result_has_bound_columns() {
        let row = SweepRow::from_result(&computed(9, 4, true)).unwrap();
        assert_eq!(
            row,
            SweepRow {
                nodes: row.nodes,
                time_ms: row.time_ms,
                ..fixed_row()
            }
        );
    }

    #[test]
    fn csv_is_byte_deterministic() {
        let rows = vec![
            fixed_row(),
            SweepRow {
                n: 30,
                k: 3,
                rb_oracle: None,
                rb_formula: Some(6),
                general_lower: 6,
                l: None,
                extremal_count: None,
                status: "aborted_node_limit".into(),
                nodes: 99,
                time_ms: 1,
            },
        ];
        let expected = "n,k,rb_oracle,rb_formula,general_lower,L,extremal_count,status,nodes,time_ms\n\
                        9,4,8,8,8,4,1,complete,1234,7\n\
                        30,3,,6,6,,,aborted_node_limit,99,1\n";
        assert_eq!(rows_to_csv(&rows), expected);
        assert_eq!(rows_to_csv(&rows), rows_to_csv(&rows.clone()));
    }

    #[test]
    fn json_round_trips() {
        let rows = vec![fixed_row()];
        let text = rows_to_json(&rows);
        assert!(text.contains("\"L\": 4"));
        let back: Vec<SweepRow> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rows);
    }

    #[test]
    fn check_row_flags_mismatch() {
        assert!(check_row(&fixed_row()).is_ok());
        let mut bad = fixed_row();
        bad.rb_oracle = Some(7);
        assert!(matches!(check_row(&bad), Err(CliError::Mismatch(_))));
        let mut below = fixed_row();
        below.rb_oracle = Some(7);
        below.rb_formula = None;
        assert!(matches!(check_row(&below), Err(CliError::Mismatch(_))));
        let mut aborted = fixed_row();
        aborted.status = "aborted_time_limit".into();
        aborted.rb_oracle = None;
        assert!(check_row(&aborted).is_ok());
    }

    #[test]
    fn store_round_trip_and_cache() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("store.json");
        let mut store = ResultStore::load(&path).unwrap();
        assert!(store.is_empty());
        assert!(store.record(computed(6, 3, false), &limits()));
        store.save().unwrap();
        let reloaded = ResultStore::load(&path).unwrap();
        assert_eq!(reloaded.len(), 1);
        assert_eq!(reloaded.cached(6, 3, false).unwrap().rb, Some(4));
        // a cached entry without an extremal count cannot serve a request
        // that needs one
        assert!(reloaded.cached(6, 3, true).is_none());
        assert!(reloaded.cached(7, 3, false).is_none());
    }

    #[test]
    fn store_precedence_rules() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("store.json");
        let mut store = ResultStore::load(&path).unwrap();
        let complete = computed(8, 3, true);
        let aborted = {
            let l = SearchLimits {
                max_nodes: Some(1),
                warm_start: false,
                ..limits()
            };
            compute_rb(8, Equation::new(3).unwrap(), &l).unwrap()
        };
        assert!(!aborted.status.is_complete());
        // aborted result is stored when nothing better exists
        assert!(store.record(aborted.clone(), &limits()));
        // completed result replaces it
        assert!(store.record(complete.clone(), &limits()));
        // aborted result never shadows a completed one
        assert!(!store.record(aborted.clone(), &limits()));
        assert_eq!(store.cached(8, 3, true).unwrap().rb, Some(5));
        // completed-without-extremal does not replace completed-with-extremal
        assert!(!store.record(computed(8, 3, false), &limits()));
        assert!(store.cached(8, 3, true).is_some());
    }

    #[test]
    fn unknown_schema_version_starts_fresh() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("store.json");
        fs::write(&path, "{\"schema_version\": 999, \"entries\": []}").unwrap();
        let store = ResultStore::load(&path).unwrap();
        assert!(store.is_empty());
    }

    #[test]
    fn corrupt_store_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("store.json");
        fs::write(&path, "{ not json").unwrap();
        assert!(matches!(
            ResultStore::load(&path),
            Err(CliError::Validation(_))
        ));
    }

    #[test]
    fn lock_excludes_second_holder() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("store.json");
        let first = StoreLock::acquire(&path).unwrap();
        let second = StoreLock::acquire_with(&path, 2, Duration::from_millis(1));
        assert!(matches!(second, Err(CliError::Validation(_))));
        drop(first);
        assert!(StoreLock::acquire(&path).is_ok());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("u".into()).exit_code(), 1);
        assert_eq!(CliError::Io("i".into()).exit_code(), 1);
        assert_eq!(CliError::Validation("v".into()).exit_code(), 2);
        assert_eq!(CliError::Mismatch("m".into()).exit_code(), 3);
    }
}
