use gaussnet_core::entanglement::evaluate_request;
use gaussnet_core::network::run_network;
use gaussnet_core::scenarios::grid;

use crate::error::{CliError, Result};
use crate::netfile::{Bindings, Netfile};
use crate::table::Table;

/// Every report of `net` evaluated once, as a one-row table.
pub fn run(net: &Netfile, bindings: &Bindings) -> Result<Table> {
    let spec = net.bind(bindings)?;
    let run = run_network(&spec)?;
    let mut table = Table::new(spec.reports.iter().map(|r| r.column_name()).collect());
    let row = spec
        .reports
        .iter()
        .map(|r| evaluate_request(&run, r))
        .collect::<gaussnet_core::Result<Vec<_>>>()?;
    table.push(row);
    Ok(table)
}

/// Evaluates the reports of `net` on `steps` evenly spaced values of `var`
/// from `from` to `to` inclusive. `fixed` binds any other placeholders.
/// The first column is `var`; the rest follow report declaration order.
pub fn sweep(net: &Netfile, var: &str, from: f64, to: f64, steps: usize, fixed: &Bindings) -> Result<Table> {
    if steps == 0 {
        return Err(CliError::NonPositiveSteps);
    }
    if !net.variables().contains(var) {
        return Err(CliError::UnboundVariable(var.to_string()));
    }
    let mut columns = vec![var.to_string()];
    columns.extend(net.reports.iter().map(|r| r.column_name()));
    let mut table = Table::new(columns);
    let mut bindings = fixed.clone();
    for x in grid(from, to, steps) {
        bindings.insert(var.to_string(), x);
        let point = run(net, &bindings)?;
        let mut row = vec![x];
        row.extend(&point.rows[0]);
        table.push(row);
    }
    Ok(table)
}
