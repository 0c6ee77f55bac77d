#pragma once

#include <string>

#include "json.hpp"

#include "sheafbn/bncheck.hpp"
#include "sheafbn/cellsheaf.hpp"
#include "sheafbn/covers.hpp"
#include "sheafbn/fundgroup.hpp"
#include "sheafbn/localsys.hpp"
#include "sheafbn/matrix.hpp"
#include "sheafbn/simplicial.hpp"

namespace sheafbn {

using Json = nlohmann::json;

// Canonical text form: object keys sorted, no whitespace, every entry exact
// (integers as JSON numbers while they fit, arbitrary precision as strings).
// Equal values always dump to identical bytes.
std::string dump_canonical(const Json& j);

// Matrices are arrays of rows; an entry is a number or an "a/b" string.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const RingSpec& ring, const Json& j);

// {"vertices": n, "maximal_simplices": [[0,1,2], ...]}
Json to_json(const SimplicialComplex& x);
SimplicialComplex complex_from_json(const Json& j);

// {"free_rank": n, "ring": "Z", "torsion": [2, 6]}
Json to_json(const FpModule& m);

// {"generators": m, "relators": [[1,1], ...]}
Json to_json(const GroupPresentation& p);

// {"ring": ..., "stalks": {"0-1": 2, ...}, "restrictions": {"0-1->0-1-2":
// [[...]], ...}}; omitted restrictions are zero, omitted stalks are rank 0.
Json to_json(const CellularSheaf& f);
CellularSheaf sheaf_from_json(const SimplicialComplex& x, const Json& j);

// {"dimension": d, "matrices": [...], "ring": ...} with one matrix per
// generator of the presentation the complex determines.
Json to_json(const Representation& rho);
Representation representation_from_json(const GroupPresentation& p,
                                        const Json& j);

// Total complex plus the vertex bookkeeping: which base vertex and which
// sheet every total vertex projects to.
Json to_json(const Cover& c);

Json to_json(const GModule& m);
Json to_json(const AsphericityVerdict& v);
Json to_json(const BNReport& r);
Json to_json(const E2Page& page);

}  // namespace sheafbn
