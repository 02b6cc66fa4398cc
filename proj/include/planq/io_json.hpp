#pragma once
#include <string>

#include <json.hpp>

#include "planq/applications.hpp"
#include "planq/embedding.hpp"
#include "planq/graph.hpp"
#include "planq/layering.hpp"
#include "planq/layout.hpp"
#include "planq/partition.hpp"

namespace planq {

using json = nlohmann::ordered_json;

json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const json& j);

json layering_to_json(const Layering& l, const BfsForest& f);
LayeringResult layering_from_json(const json& j);

json partition_to_json(const Partition& p, const TreeDecomposition& td);
struct PartitionDoc {
    Partition partition;
    TreeDecomposition td;
};
PartitionDoc partition_from_json(const json& j);

// "ordering": vertex array; "queues": per queue an array of [u, v] edges.
json layout_to_json(const Graph& g, const QueueLayout& l);
QueueLayout layout_from_json(const Graph& g, const json& j);

json injection_to_json(const ProductInjection& inj);
json colouring_to_json(const LowTreewidthColouring& col);

json parse_json(const std::string& text);  // wraps parse errors in ParseError
std::string dump_json(const json& j);      // 2-space indent, trailing newline

std::string read_file(const std::string& path);      // ParseError if unreadable
void write_file(const std::string& path, const std::string& content);

}  // namespace planq
