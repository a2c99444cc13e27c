/// Human-readable output: a short header followed by the command's table.
pub fn pretty(command: &str, patterns: Option<&str>, notices: &[String], body: &str) -> String {
    let mut out = format!("# {command}");
    if let Some(p) = patterns {
        out.push_str(&format!(" {p}"));
    }
    out.push('\n');
    for n in notices {
        out.push_str(&format!("# note: {n}\n"));
    }
    out.push_str(body);
    out
}
