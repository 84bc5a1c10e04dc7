//! Record serialization: one line per record in jsonl, csv, or human form,
//! with a fixed field order for diffability.

use std::io::{self, Write};

use delannoy::suite::{Outcome, VerificationRecord};
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum OutputFormat {
    Jsonl,
    Csv,
    Human,
}

pub const CSV_HEADER: &str = "statement,p,e,lhs,rhs,ok,note";

#[derive(Serialize)]
struct RecordLine<'a> {
    statement: &'a str,
    p: u32,
    e: u8,
    lhs: u64,
    rhs: u64,
    ok: bool,
    note: &'a str,
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Formats one record as a single line (no trailing newline).
pub fn format_record(rec: &VerificationRecord, format: OutputFormat) -> String {
    match format {
        OutputFormat::Jsonl => {
            let line = RecordLine {
                statement: rec.statement.name(),
                p: rec.p,
                e: rec.e,
                lhs: rec.lhs,
                rhs: rec.rhs,
                ok: rec.ok,
                note: &rec.note,
            };
            serde_json::to_string(&line).expect("record serialization cannot fail")
        }
        OutputFormat::Csv => format!(
            "{},{},{},{},{},{},{}",
            rec.statement.name(),
            rec.p,
            rec.e,
            rec.lhs,
            rec.rhs,
            rec.ok,
            csv_escape(&rec.note)
        ),
        OutputFormat::Human => {
            let m = (rec.p as u64).pow(rec.e as u32);
            match rec.outcome() {
                Outcome::OutOfDomain => {
                    format!("{} p={} SKIP ({})", rec.statement.name(), rec.p, rec.note)
                }
                Outcome::Pass => {
                    let mut line = format!(
                        "{} p={} OK ({} \u{2261} {} mod {})",
                        rec.statement.name(),
                        rec.p,
                        rec.lhs,
                        rec.rhs,
                        m
                    );
                    if !rec.note.is_empty() {
                        line.push_str(&format!(" [{}]", rec.note));
                    }
                    line
                }
                Outcome::Fail => {
                    let mut line = format!(
                        "{} p={} FAIL ({} \u{2262} {} mod {})",
                        rec.statement.name(),
                        rec.p,
                        rec.lhs,
                        rec.rhs,
                        m
                    );
                    if !rec.note.is_empty() {
                        line.push_str(&format!(" [{}]", rec.note));
                    }
                    line
                }
            }
        }
    }
}

/// Writes the per-format preamble (only csv has one: the header row).
pub fn write_preamble<W: Write>(w: &mut W, format: OutputFormat) -> io::Result<()> {
    if format == OutputFormat::Csv {
        writeln!(w, "{CSV_HEADER}")?;
    }
    Ok(())
}

pub fn write_record<W: Write>(
    w: &mut W,
    rec: &VerificationRecord,
    format: OutputFormat,
) -> io::Result<()> {
    writeln!(w, "{}", format_record(rec, format))
}
