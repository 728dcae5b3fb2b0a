//! CSV emission helpers. All floating-point values are serialized with 17
//! significant digits so they round-trip exactly; 128-bit indices print as
//! decimal strings.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::CliError;

/// Round-trippable float formatting: 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// A CSV sink: a file when `--out` was given, stdout otherwise.
pub enum Sink {
    Stdout(io::Stdout),
    File(BufWriter<File>),
}

impl Sink {
    pub fn create(out: Option<&Path>) -> Result<Self, CliError> {
        match out {
            None => Ok(Sink::Stdout(io::stdout())),
            Some(path) => Ok(Sink::File(BufWriter::new(File::create(path)?))),
        }
    }

    pub fn writer(&mut self) -> &mut dyn Write {
        match self {
            Sink::Stdout(w) => w,
            Sink::File(w) => w,
        }
    }

    pub fn finish(mut self) -> Result<(), CliError> {
        self.writer().flush()?;
        Ok(())
    }
}

/// Write a header row and then each record row, comma-separated.
pub fn write_csv<I, R>(sink: &mut Sink, header: &[&str], rows: I) -> Result<(), CliError>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let w = sink.writer();
    writeln!(w, "{}", header.join(","))?;
    for row in rows {
        let cells: Vec<String> = row.into_iter().collect();
        writeln!(w, "{}", cells.join(","))?;
    }
    Ok(())
}

/// Parse "re" or "re,im" into a complex number.
pub fn parse_complex(text: &str) -> Result<num_complex::Complex64, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    let parse = |p: &str| -> Result<f64, CliError> {
        p.trim()
            .parse::<f64>()
            .map_err(|_| CliError::Usage(format!("cannot parse {p:?} as a number")))
    };
    match parts.as_slice() {
        [re] => Ok(num_complex::Complex64::new(parse(re)?, 0.0)),
        [re, im] => Ok(num_complex::Complex64::new(parse(re)?, parse(im)?)),
        _ => Err(CliError::Usage(format!(
            "complex values are written as \"re\" or \"re,im\", got {text:?}"
        ))),
    }
}
