pub mod coeff;
