use std::time::Instant;
use quintic_gw::pairs::*;
use quintic_gw::solver::*;
fn main(){
  let t=Instant::now(); let k=GdKey::new(2,2).unwrap(); build_fmatrix(k, SolverLimits::default()).unwrap(); println!("fm22 {:?}",t.elapsed());
  for (g,d) in [(2,2),(3,2)] { let t=Instant::now(); let k=GdKey::new(g,d).unwrap();
    for z in enumerate_s_prime(k,EnumerationLimits::default()).unwrap(){ solve_crho(k,&z).unwrap(); assemble_master(k,&z).unwrap(); }
    println!("collapse {g}{d} {:?}",t.elapsed()); }
  for g in [2,3] { let t=Instant::now(); for d in 1..=8 { let k=GdKey::new(g,d).unwrap(); let z=quintic_gw::closed_forms::standard_zeta(k).unwrap(); solve_crho(k,&z).unwrap(); } println!("master {g} {:?}",t.elapsed()); }
  let t=Instant::now(); build_fmatrix(GdKey::new(3,2).unwrap(), SolverLimits::default()).unwrap(); println!("fm32 {:?}",t.elapsed());
}
