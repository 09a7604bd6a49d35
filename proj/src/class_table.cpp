#include "weylk/class_table.hpp"

namespace weylk::class_table {

const std::vector<ClassFixture>& e6_classes() {
    static const std::vector<ClassFixture> table = {
        {"empty", "", "1,1,1,1,1,1", 51840, {{1, 6}},
         {"s1", "s2", "s3", "s4", "s5", "s6"}, 51840, 1,
         {"s1", "s2", "s3", "s4", "s5", "s6"}, 1, "W(E6)",
         6, {}, 0, {}, false, 1, {1, 0, 0, 0, 0, 0, 0}},
        {"A1", "s0", "1,1,1,1,1,-1", 1440, {{1, 5}, {2, 1}},
         {"s0", "s1", "s2", "s3", "s4", "s5"}, 1440, 1,
         {"s0", "s1", "s2", "s3", "s4", "s5"}, 2, "C2 x S6",
         5, {}, 2, {}, false, 1, {1, 0, 0, 0, 0, 0}},
        {"A1^2", "s0 s1", "1,1,1,1,-1,-1", 192, {{1, 4}, {2, 2}},
         {"s0", "s1", "s3", "s4", "s5"}, 96, 2,
         {"s0", "s1", "u2", "s3", "s4", "s5"}, 2, "(C2 wr C2) x S4",
         4, {}, 2, {}, false, 1, {1, 1, 0, 0, 0}},
        {"A2", "s0 s6", "1,1,1,1,e(2/3),e(4/3)", 216, {{1, 4}, {3, 1}},
         {"s0 s6", "s1", "s2", "s4", "s5"}, 108, 2,
         {"s0 s6", "s1", "s2", "u1", "s4", "s5"}, 3, "C3 x (S3 wr C2)",
         4, {}, 3, {}, false, 1, {1, 0, 0, 0, 0}},
        {"A1^3", "s0 s1 s5", "1,1,1,-1,-1,-1", 96, {{1, 3}, {2, 3}},
         {"s0", "s1", "s5", "s3"}, 16, 6,
         {"s0", "s1", "s5", "u1", "u2", "s3"}, 2, "(C2 wr3 S3) x C2",
         3, {}, 2, {}, false, 1, {1, 0, 0, 0}},
        {"A2xA1", "s0 s6 s1", "1,1,1,e(2/3),e(4/3),-1", 36, {{1, 3}, {2, 1}, {3, 1}},
         {"s0 s6", "s1", "s4", "s5"}, 36, 1,
         {"s0 s6", "s1", "s4", "s5"}, 6, "C3 x C2 x S3",
         3, {}, 6, {}, false, 1, {1, 1, 0, 0}},
        {"A3", "s0 s6 s3", "1,1,1,i,-1,-i", 32, {{1, 3}, {2, 1}, {4, 1}},
         {"s0 s6 s3", "s1", "s5"}, 16, 2,
         {"s0 s6 s3", "s1", "s5", "u1"}, 4, "C4 x (C2 wr C2)",
         3, {}, 4, {}, false, 1, {1, 1, 0, 0}},
        {"A1^4", "s0 s1 s5 s3", "1,1,-1,-1,-1,-1", 1152, {{1, 2}, {2, 4}},
         {"s0", "s1", "s5", "s3"}, 16, 72,
         {"s0", "s1", "s5", "T", "u1", "u2"}, 2, "W(D4):S3",
         2, {2, 2}, 2, {{1, 0}, {0, 1}}, false, 2, {2, 0, 0}},
        {"A2xA1^2", "s0 s6 s1 s5", "1,1,e(2/3),e(4/3),-1,-1", 24, {{1, 2}, {2, 2}, {3, 1}},
         {"s0 s6", "s1", "s5"}, 12, 2,
         {"s0 s6", "s1", "s5", "u1"}, 6, "C3 x (C2 wr C2)",
         2, {}, 6, {}, false, 1, {1, 1, 0}},
        {"A2^2", "s0 s6 s1 s2", "1,1,e(2/3),e(4/3),e(2/3),e(4/3)", 108, {{1, 2}, {3, 2}},
         {"s0 s6", "s1 s2", "s4", "s5"}, 54, 2,
         {"s0 s6", "s1 s2", "u2", "s4", "s5"}, 3, "(C3 wr C2) x S3",
         2, {3}, 3, {{1}}, true, 3, {3, 0, 0}},
        {"A3xA1", "s0 s6 s3 s1", "1,1,i,-1,-i,-1", 16, {{1, 2}, {2, 2}, {4, 1}},
         {"s0 s6 s3", "s1", "s5"}, 16, 1,
         {"s0 s6 s3", "s1", "s5"}, 4, "C4 x C2 x C2",
         2, {}, 4, {}, false, 1, {1, 1, 0}},
        {"A4", "s0 s6 s3 s4", "1,1,e(2/5),e(4/5),e(6/5),e(8/5)", 10, {{1, 2}, {5, 1}},
         {"s0 s6 s3 s4", "s1"}, 10, 1,
         {"s0 s6 s3 s4", "s1"}, 5, "C5 x C2",
         2, {}, 5, {}, false, 1, {1, 1, 0}},
        {"D4", "s0 s1 s5 T", "1,1,-1,-1,e(1/3),e(5/3)", 36, {{1, 2}, {2, 2}, {6, 1}},
         {"s0 s1 s5 T"}, 6, 6,
         {"s0 s1 s5 T", "u1", "u2"}, 6, "C6 x S3",
         2, {}, 2, {}, false, 1, {1, 0, 0}},
        {"D4[a1]", "s1 T s5 s0^{T}", "1,1,i,-i,i,-i", 96, {{1, 2}, {4, 2}},
         {"s1 T s5 s0^{T}"}, 4, 24,
         {"s5 u3", "s5^{T} u1"}, 4, "G8",
         2, {}, 2, {}, false, 1, {1, 0, 0}},
        {"A2^2xA1", "s0 s6 s5 s1 s2", "1,e(2/3),e(4/3),-1,e(2/3),e(4/3)", 36, {{1, 1}, {2, 1}, {3, 2}},
         {"s0 s6", "s5", "s1 s2"}, 18, 2,
         {"s0 s6", "s1 s2", "u2", "s5"}, 6, "(C3 wr C2) x C2",
         1, {3}, 6, {{2}}, true, 3, {3, 0}},
        {"A3xA1^2", "s0 s6 s3 s1 s5", "1,i,-1,-i,-1,-1", 96, {{1, 1}, {2, 3}, {4, 1}},
         {"s0 s6 s3", "s1", "s5"}, 16, 6,
         {"s0 s6 s3 s1 s5", "s1", "T", "s5"}, 4, "C4 x S4",
         1, {2, 2}, 4, {{0, 2}, {2, 0}}, false, 2, {2, 2}},
        {"A4xA1", "s0 s6 s3 s4 s1", "1,e(2/5),e(4/5),e(6/5),e(8/5),-1", 10, {{1, 1}, {2, 1}, {5, 1}},
         {"s0 s6 s3 s4", "s1"}, 10, 1,
         {"s0 s6 s3 s4", "s1"}, 10, "C5 x C2",
         1, {}, 10, {}, false, 1, {1, 1}},
        {"A5", "s0 s6 s3 s4 s5", "1,e(1/3),e(2/3),-1,e(4/3),e(5/3)", 12, {{1, 1}, {2, 1}, {3, 1}, {6, 1}},
         {"s0 s6 s3 s4 s5", "s1"}, 12, 1,
         {"s0 s6 s3 s4 s5", "s1"}, 6, "C6 x C2",
         1, {3}, 6, {{4}}, true, 3, {3, 0}},
        {"D5", "s0 s6 s3 s4 s3^{s2 s4}", "1,-1,e(1/4),e(3/4),e(5/4),e(7/4)", 8, {{1, 1}, {2, 1}, {8, 1}},
         {"s0 s6 s3 s4 s3^{s2 s4}"}, 8, 1,
         {"s0 s6 s3 s4 s3^{s2 s4}"}, 8, "C8",
         1, {}, 4, {}, false, 1, {1, 1}},
        {"D5[a1]", "s0 s6 s3 s4 T", "1,-1,i,-i,e(1/3),e(5/3)", 12, {{1, 1}, {2, 1}, {4, 1}, {6, 1}},
         {"s0 s6 s3 s4 T"}, 12, 1,
         {"s0 s6 s3 s4 T"}, 12, "C12",
         1, {}, 4, {}, false, 1, {1, 1}},
        {"A2^3", "s0 s6 s1 s2 s5 s4", "e(2/3),e(4/3),e(2/3),e(4/3),e(2/3),e(4/3)", 648, {{3, 3}},
         {"s0 s6", "s1 s2", "s4 s5"}, 27, 24,
         {"s0 s6", "T s3", "s5 s4"}, 3, "G25",
         0, {3, 3, 3}, 3, {{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}, true, 4, {4}},
        {"A5xA1", "s0 s6 s3 s4 s5 s1", "e(1/3),e(2/3),-1,e(4/3),e(5/3),-1", 36, {{2, 2}, {3, 1}, {6, 1}},
         {"s0 s6 s3 s4 s5", "s1"}, 12, 3,
         {"s0 s6 s3 s4 s5 s1", "s1", "T"}, 6, "C6 x S3",
         0, {2, 6}, 6, {{3, 0}, {0, 5}}, true, 6, {6}},
        {"E6", "s1 s2 s3 s4 s5 s6", "e(2/3),e(4/3),e(1/6),e(5/6),e(7/6),e(11/6)", 12, {{3, 1}, {12, 1}},
         {"s1 s2 s3 s4 s5 s6"}, 12, 1,
         {"s1 s2 s3 s4 s5 s6"}, 12, "C12",
         0, {3}, 3, {{2}}, true, 3, {3}},
        {"E6[a1]", "s1 s2 s3 s4 s5 s6^{s3}", "e(2/9),e(4/9),e(8/9),e(10/9),e(14/9),e(16/9)", 9, {{9, 1}},
         {"s1 s2 s3 s4 s5 s6^{s3}"}, 9, 1,
         {"s1 s2 s3 s4 s5 s6^{s3}"}, 9, "C9",
         0, {3}, 3, {{2}}, true, 3, {3}},
        {"E6[a2]", "s6 s2 s0^{T} s1^{T} s4 s3", "e(1/3),e(1/3),e(2/3),e(4/3),e(5/3),e(5/3)", 72, {{3, 1}, {6, 2}},
         {"s6 s2 s0^{T} s1^{T} s4 s3"}, 6, 12,
         {"s6 s2 s0^{T} s1^{T} s4 s3 s6 s2 s0^{T} s1^{T} s4 s3", "T s3", "s5 s4"}, 6, "G5",
         0, {3}, 3, {{1}}, true, 3, {3}},
    };
    return table;
}

const ClassFixture* find(const std::string& label) {
    for (const ClassFixture& f : e6_classes())
        if (label == f.label) return &f;
    return nullptr;
}

std::pair<long, long> e6_ktheory_expected() {
    long k0 = 0, k1 = 0;
    for (const ClassFixture& f : e6_classes())
        for (std::size_t i = 0; i < f.betti.size(); ++i)
            (i % 2 == 0 ? k0 : k1) += f.betti[i];
    return {k0, k1};
}

} // namespace weylk::class_table
