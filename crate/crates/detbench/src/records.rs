//! Benchmark records and their CSV/JSON/table rendering.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct BenchRecord {
    pub algorithm: String,
    pub n: usize,
    pub r: Option<usize>,
    pub seed: u64,
    pub ring: String,
    pub n_mul: u64,
    pub n_div: u64,
    pub n_add: u64,
    pub c_mul: u64,
    pub c_div: u64,
    pub c_add: u64,
    pub formula_n_mul: Option<u64>,
    pub formula_n_div: Option<u64>,
    pub formula_n_add: Option<u64>,
    pub wall_time_ns: u128,
    pub result_digest: String,
}

pub const CSV_HEADER: &str = "algorithm,n,r,seed,ring,n_mul,n_div,n_add,c_mul,c_div,c_add,\
formula_n_mul,formula_n_div,formula_n_add,wall_time_ns,result_digest";

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        [
            csv_quote(&self.algorithm),
            self.n.to_string(),
            opt(&self.r),
            self.seed.to_string(),
            csv_quote(&self.ring),
            self.n_mul.to_string(),
            self.n_div.to_string(),
            self.n_add.to_string(),
            self.c_mul.to_string(),
            self.c_div.to_string(),
            self.c_add.to_string(),
            opt(&self.formula_n_mul),
            opt(&self.formula_n_div),
            opt(&self.formula_n_add),
            self.wall_time_ns.to_string(),
            csv_quote(&self.result_digest),
        ]
        .join(",")
    }

    /// Measured tallies equal the formula columns (vacuously true when no
    /// formula applies).
    pub fn matches_formula(&self) -> bool {
        match (self.formula_n_mul, self.formula_n_div, self.formula_n_add) {
            (Some(m), Some(d), Some(a)) => {
                self.n_mul == m && self.n_div == d && self.n_add == a
            }
            _ => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format '{other}' (expected table, csv or json)")),
        }
    }
}

/// Renders the record stream: CSV with the stable header, newline-delimited
/// JSON, or an aligned table.
pub fn render(records: &[BenchRecord], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in records {
                out.push_str(&r.csv_row());
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let mut out = String::new();
            for r in records {
                out.push_str(&serde_json::to_string(r).expect("record serializes"));
                out.push('\n');
            }
            out
        }
        OutputFormat::Table => {
            let headers: Vec<&str> = CSV_HEADER.split(',').collect();
            let mut rows: Vec<Vec<String>> = vec![headers.iter().map(|s| s.to_string()).collect()];
            for r in records {
                rows.push(vec![
                    r.algorithm.clone(),
                    r.n.to_string(),
                    opt(&r.r),
                    r.seed.to_string(),
                    r.ring.clone(),
                    r.n_mul.to_string(),
                    r.n_div.to_string(),
                    r.n_add.to_string(),
                    r.c_mul.to_string(),
                    r.c_div.to_string(),
                    r.c_add.to_string(),
                    opt(&r.formula_n_mul),
                    opt(&r.formula_n_div),
                    opt(&r.formula_n_add),
                    r.wall_time_ns.to_string(),
                    r.result_digest.clone(),
                ]);
            }
            let widths: Vec<usize> = (0..rows[0].len())
                .map(|c| rows.iter().map(|row| row[c].len()).max().unwrap_or(0))
                .collect();
            rows.iter()
                .map(|row| {
                    row.iter()
                        .zip(&widths)
                        .map(|(cell, w)| format!("{cell:>w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                })
                .collect::<Vec<_>>()
                .join("\n")
                + "\n"
        }
    }
}

/// FNV-1a digest of a canonical result text.
pub fn digest(text: &str) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in text.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quoting_and_schema() {
        let rec = BenchRecord {
            algorithm: "combined".into(),
            n: 5,
            r: Some(3),
            seed: 1,
            ring: "poly:2,1:bigint".into(),
            n_mul: 49,
            n_div: 5,
            n_add: 30,
            c_mul: 100,
            c_div: 10,
            c_add: 90,
            formula_n_mul: Some(49),
            formula_n_div: Some(5),
            formula_n_add: Some(30),
            wall_time_ns: 0,
            result_digest: "deadbeefdeadbeef".into(),
        };
        let row = rec.csv_row();
        assert!(row.contains("\"poly:2,1:bigint\""));
        assert_eq!(CSV_HEADER.split(',').count(), 16);
        assert!(rec.matches_formula());
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(digest("-2"), digest("-2"));
        assert_ne!(digest("-2"), digest("2"));
    }
}
