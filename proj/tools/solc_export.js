// Copyright 2026 The Yulkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exports solc's Yul AST JSON for a .yul file:
//   NODE_PATH=<dir containing solc> node solc_export.js in.yul > in.json
// The output is solc's standard-JSON output for a single Yul source, with a
// "yulkit_provenance" member recording the compiler version.
const fs = require('fs');
const path = require('path');
const solc = require('solc');

const file = process.argv[2];
const name = path.basename(file);
const input = {
  language: 'Yul',
  sources: {[name]: {content: fs.readFileSync(file, 'utf8')}},
  settings: {outputSelection: {'*': {'*': ['*'], '': ['*']}}},
};
const out = JSON.parse(solc.compile(JSON.stringify(input)));
// Yul input with warnings comes back without an AST.
if (!out.sources) {
  for (const e of out.errors || []) console.error(e.formattedMessage);
  process.exit(1);
}
const result = {
  yulkit_provenance: {solc_version: solc.version(), source: name},
  sources: out.sources,
};
process.stdout.write(JSON.stringify(result, null, 1) + '\n');
