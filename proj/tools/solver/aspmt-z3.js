#!/usr/bin/env node
// SMT-LIB2 runner backed by the z3-solver WASM package, for use as an
// ASPMT_SOLVER command: reads an instance from the given file (or stdin),
// prints the verdict and the model.
//
// Algebraic reals are printed as decimal approximations with a trailing
// '?' (25 digits), which the model parser treats as inexact values.
'use strict';

const fs = require('fs');

async function main() {
  const path = process.argv[2];
  const text = path ? fs.readFileSync(path, 'utf8') : fs.readFileSync(0, 'utf8');
  const { init } = require('z3-solver');
  const { Z3 } = await init();
  const cfg = Z3.mk_config();
  const ctx = Z3.mk_context(cfg);
  Z3.del_config(cfg);
  const prelude =
    '(set-option :pp.decimal true)\n(set-option :pp.decimal_precision 25)\n';
  try {
    const out = await Z3.eval_smtlib2_string(ctx, prelude + text);
    process.stdout.write(out.endsWith('\n') ? out : out + '\n');
  } catch (err) {
    process.stdout.write('unknown\n');
    process.stderr.write(String(err) + '\n');
    process.exitCode = 1;
  } finally {
    Z3.del_context(ctx);
  }
  process.exit();
}

main();
