#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "elliptic/group_descriptor.hpp"

namespace elliptic {

enum class TableId { lens, elliptic, klein_isom, orbifold, diff };

std::optional<TableId> parse_table_id(const std::string& name);
std::string table_name(TableId id);
std::span<const TableId> all_tables();

// A piece of text with its ASCII fallback.
struct Text {
    std::string utf8;
    std::string ascii;
    const std::string& in(Notation n) const { return n == Notation::utf8 ? utf8 : ascii; }
};

struct LensRow {
    Text condition;
    bool (*applies)(long m, long q);
    GroupDescriptor isom;
    GroupDescriptor pi0;
};

enum class MType { lens, quaternionic, prism, tetrahedral, octahedral, icosahedral };
std::string to_string(MType t);

enum class EllipticFamily {
    q8,
    q8_x_cn,
    d4m,
    d4m_x_cn,
    index2_diagonal,
    t24,
    t24_x_cn,
    index3_diagonal,
    o48,
    o48_x_cn,
    i120,
    i120_x_cn,
};

struct EllipticRow {
    EllipticFamily family;
    Text group;
    MType mtype;
    GroupDescriptor isom;
    GroupDescriptor pi0;
};

struct KleinIsomRow {
    Text condition;
    bool (*applies)(long m, long n);
    Text manifold;
    GroupDescriptor isom;
    Text realized_as;
};

struct OrbifoldDescriptor {
    enum class Base { sphere, projective_plane };
    Base base = Base::sphere;
    std::vector<std::string> cone_orders;

    std::string render(Notation n = Notation::utf8) const;
    OrbifoldDescriptor substitute(long m, long n) const;
    bool operator==(const OrbifoldDescriptor&) const = default;
};

struct OrbifoldRow {
    Text condition;
    bool (*applies)(long m, long n);
    GroupDescriptor image;
    Text image_generators;
    OrbifoldDescriptor orbifold;
    GroupDescriptor isom;
};

enum class DiffCase {
    lens_q1_m_odd,
    lens_q1_m_even,
    lens_generic,
    lens_q2_pm1,
    klein_q8,
    klein_q8_x_cn,
    klein_d4m,
    klein_other_prism,
};

struct DiffRow {
    DiffCase key;
    std::string family;
    Text condition;
    GroupDescriptor diff;
};

std::span<const LensRow> lens_table();
std::span<const EllipticRow> elliptic_table();
std::span<const KleinIsomRow> klein_isom_table();
std::span<const OrbifoldRow> orbifold_table();
std::span<const DiffRow> diff_table();

enum class TableFormat { tsv, text };

std::string render_table(TableId id, TableFormat format = TableFormat::tsv, Notation notation = Notation::utf8);

}  // namespace elliptic
