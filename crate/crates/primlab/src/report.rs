//! Rendering helpers shared by the CLI and the examples: comment lines,
//! header + row emission in the three output dialects, and the fixed
//! 6-significant-digit ratio format the count tables use.

use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    /// Comma-separated fields, `#`-prefixed comment lines, no quoting
    /// (every field is numeric or a bare identifier).
    Csv,
    /// Pipe tables with comments as HTML comments.
    Markdown,
    /// Space-separated fields, no header separator.
    Plain,
}

impl OutputFormat {
    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Markdown => "markdown",
            OutputFormat::Plain => "plain",
        }
    }
}

/// Writes one out-of-band comment line.
pub fn write_comment(out: &mut dyn Write, format: OutputFormat, text: &str) -> io::Result<()> {
    match format {
        OutputFormat::Csv | OutputFormat::Plain => writeln!(out, "# {text}"),
        OutputFormat::Markdown => writeln!(out, "<!-- {text} -->"),
    }
}

/// Writes the column header for a table.
pub fn write_header(out: &mut dyn Write, format: OutputFormat, cols: &[&str]) -> io::Result<()> {
    match format {
        OutputFormat::Csv => writeln!(out, "{}", cols.join(",")),
        OutputFormat::Plain => writeln!(out, "{}", cols.join(" ")),
        OutputFormat::Markdown => {
            writeln!(out, "| {} |", cols.join(" | "))?;
            let dashes: Vec<&str> = cols.iter().map(|_| "---").collect();
            writeln!(out, "| {} |", dashes.join(" | "))
        }
    }
}

/// Writes one data row.
pub fn write_row(out: &mut dyn Write, format: OutputFormat, fields: &[String]) -> io::Result<()> {
    match format {
        OutputFormat::Csv => writeln!(out, "{}", fields.join(",")),
        OutputFormat::Plain => writeln!(out, "{}", fields.join(" ")),
        OutputFormat::Markdown => writeln!(out, "| {} |", fields.join(" | ")),
    }
}

/// Renders x to 6 significant digits with trailing zeros trimmed, the way
/// the count tables print their ratio column (`%g`-style).
pub fn format_sig6(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    let prec = (5 - exp).max(0) as usize;
    let rendered = format!("{x:.prec$}");
    if rendered.contains('.') {
        rendered
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    } else {
        rendered
    }
}
