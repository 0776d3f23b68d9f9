use alloc::string::String;

/// First of `base`, `base'`, `base''`, ... for which `taken` is false.
pub(crate) fn fresh_name(base: &str, taken: impl Fn(&str) -> bool) -> String {
    let mut name = String::from(base);
    while taken(&name) {
        name.push('\'');
    }
    name
}
