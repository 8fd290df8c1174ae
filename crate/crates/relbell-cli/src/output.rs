//! Record types and CSV/JSON rendering. Numbers are written with Rust's
//! shortest round-trip formatting, so files are bit-stable for a given
//! configuration and parse back to the exact values computed.

use serde::Serialize;
use std::io::Write;
use std::path::Path;

#[derive(Serialize, Debug)]
pub struct VerifyRecord {
    pub name: &'static str,
    pub worst_residual: f64,
    pub tolerance: f64,
    pub cases: usize,
    pub passed: bool,
}

#[derive(Serialize, Debug)]
pub struct CorrelatorRecord {
    pub beta: f64,
    pub boost_dir: [f64; 3],
    pub operator: &'static str,
    pub a: [f64; 3],
    pub a_prime: [f64; 3],
    pub b: [f64; 3],
    pub b_prime: [f64; 3],
    pub e_ab: f64,
    pub e_a_prime_b: f64,
    pub e_a_b_prime: f64,
    pub e_a_prime_b_prime: f64,
    pub chsh_value: f64,
    pub converged: bool,
}

impl CorrelatorRecord {
    pub fn csv(&self) -> String {
        let mut out = String::from(
            "beta,boost_dir_x,boost_dir_y,boost_dir_z,operator,\
             a_x,a_y,a_z,a_prime_x,a_prime_y,a_prime_z,\
             b_x,b_y,b_z,b_prime_x,b_prime_y,b_prime_z,\
             e_ab,e_a_prime_b,e_a_b_prime,e_a_prime_b_prime,chsh_value,converged\n",
        );
        let vec3 = |v: &[f64; 3]| format!("{},{},{}", v[0], v[1], v[2]);
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            self.beta,
            vec3(&self.boost_dir),
            self.operator,
            vec3(&self.a),
            vec3(&self.a_prime),
            vec3(&self.b),
            vec3(&self.b_prime),
            self.e_ab,
            self.e_a_prime_b,
            self.e_a_b_prime,
            self.e_a_prime_b_prime,
            self.chsh_value,
            self.converged,
        ));
        out
    }
}

#[derive(Serialize, Debug)]
pub struct ScanRow {
    pub beta: f64,
    pub operator: &'static str,
    pub restriction: &'static str,
    pub chsh_max: f64,
    pub converged: bool,
    pub iterations: usize,
}

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("beta,operator,restriction,chsh_max,converged,iterations\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.beta, row.operator, row.restriction, row.chsh_max, row.converged, row.iterations
        ));
    }
    out
}

#[derive(Serialize, Debug)]
pub struct CompareRow {
    pub beta: f64,
    #[serde(rename = "E_pauli_lubanski")]
    pub e_pauli_lubanski: f64,
    #[serde(rename = "E_czachor")]
    pub e_czachor: f64,
    pub delta: f64,
}

pub fn compare_csv(rows: &[CompareRow]) -> String {
    let mut out = String::from("beta,E_pauli_lubanski,E_czachor,delta\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.beta, row.e_pauli_lubanski, row.e_czachor, row.delta
        ));
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value)
        .map(|text| format!("{text}\n"))
        .map_err(|error| format!("cannot serialize output: {error}"))
}

/// Writes to stdout, or atomically to a file: the content lands in a
/// temporary file in the destination directory and is renamed into place,
/// so a failed run never leaves a partial output file.
pub fn write_output(path: Option<&Path>, contents: &str) -> Result<(), String> {
    let Some(path) = path else {
        print!("{contents}");
        return Ok(());
    };
    let dir = match path.parent() {
        Some(parent) if !parent.as_os_str().is_empty() => parent,
        _ => Path::new("."),
    };
    let mut file = tempfile::NamedTempFile::new_in(dir)
        .map_err(|error| format!("--out: cannot write in {}: {error}", dir.display()))?;
    file.write_all(contents.as_bytes())
        .map_err(|error| format!("--out: write failed: {error}"))?;
    file.persist(path)
        .map_err(|error| format!("--out: cannot move output into place: {error}"))?;
    Ok(())
}
