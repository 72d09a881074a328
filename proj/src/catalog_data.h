// Copyright 2026 The Edgedom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDGEDOM_SRC_CATALOG_DATA_H_
#define EDGEDOM_SRC_CATALOG_DATA_H_

namespace edgedom {

// Contents of data/catalog.tsv, embedded at build time.
extern const char kCatalogTsv[];

}  // namespace edgedom

#endif  // EDGEDOM_SRC_CATALOG_DATA_H_
