//! Reading programs from files or from the command line.

use std::fs;
use std::path::Path;

use lpl_core::{parse_program, parse_type, Term, Type};

use crate::Error;

/// The text of `arg`: the contents of the file it names, or `arg` itself.
pub fn read_source(arg: &str) -> Result<String, Error> {
    let path = Path::new(arg);
    if path.is_file() {
        fs::read_to_string(path).map_err(|source| Error::Io { path: arg.to_owned(), source })
    } else {
        Ok(arg.to_owned())
    }
}

/// The main term of the program given by `arg`, definitions inlined.
pub fn load_term(arg: &str) -> Result<Term, Error> {
    let text = read_source(arg)?;
    parse_program(&text)?.main.ok_or(Error::MissingMain)
}

pub fn load_type(arg: &str) -> Result<Type, Error> {
    Ok(parse_type(&read_source(arg)?)?)
}
