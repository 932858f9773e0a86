#pragma once

#include <json.hpp>

#include "tlbd/linop.hpp"
#include "tlbd/morphism.hpp"
#include "tlbd/rep.hpp"

namespace tlbd {

using Json = nlohmann::ordered_json;

/// {"source":m,"target":k,"eps":1,"terms":[{"coeff":"...","arcs":[[1,4],[2,3]],"dots":[1,0]}]}
Json to_json(const TLMorphism& f);
TLMorphism morphism_from_json(const Json& j);

/// {"dims":[r,c],"entries":[[i,j,"<RatFunc>"]]}
Json to_json(const LinOp& m);
LinOp linop_from_json(const Json& j);

/// {"dims":[d],"entries":[[i,"<RatFunc>"]]}
Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);

/// {"mult":{"2":1,"0":2,"-2":1}}
Json to_json(const FusionVector& f);
FusionVector fusion_from_json(const Json& j);

Json to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j, int source, int target);

}  // namespace tlbd
