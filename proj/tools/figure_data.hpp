#pragma once

// Reference caustic parameters and bounce counts for periodic and
// elliptic-periodic examples, used by `checks --suite table` and the tests.

#include <vector>

namespace pellipse::figures {

struct PeriodicRow {
    int n;
    int a, b;
    double gamma; // reference value
    int n1, n2;
};

inline const std::vector<PeriodicRow>& periodic_rows() {
    static const std::vector<PeriodicRow> rows{
        {3, 3, 2, 2.332271493, 2, 1},   {3, 7, 5, -4.589037886, 1, 2},  {4, 9, 3, -2.25, 2, 2},
        {4, 2, 4, 4.0 / 3.0, 2, 2},     {4, 5, 3, -7.5, 2, 2},          {5, 5, 2, 4.737508555, 4, 1},
        {5, 6, 4, 1.420505298, 2, 3},   {5, 6, 4, -3.994725285, 1, 4},  {5, 6, 4, -1.541267129, 3, 2},
        {6, 5, 3, -3.226423538, 2, 4},  {6, 3, 7, 3.118873395, 4, 2},   {7, 3, 7, -6.971157243, 1, 6},
        {7, 7, 3, 6.971157243, 6, 1},   {8, 6, 3, -3.015133332, 2, 6},  {8, 6, 3, 6.916766911, 6, 2},
        {8, 6, 3, 5.370677562, 6, 2},
    };
    return rows;
}

struct EllipticRow {
    int n;
    int a, b;
    double gamma;     // reference value
    double tolerance; // precision of the reference value
    char case_id;
};

inline const std::vector<EllipticRow>& elliptic_rows() {
    static const std::vector<EllipticRow> rows{
        {2, 5, 3, -15.0 / 8.0, 1e-3, 'b'}, {2, 5, 7, 35.0 / 12.0, 1e-3, 'a'}, {2, 7, 3, -21.0 / 4.0, 1e-3, 'c'},
        {3, 6, 3, -3.1595918, 1e-3, 'e'},  {3, 3, 5, 3.2264236, 1e-3, 'd'},   {3, 9, 2, -0.8831827, 1e-3, 'b'},
        {3, 4, 9, 1.312805, 1e-3, 'a'},    {4, 5, 3, 4.6216, 5e-4, 'a'},      {4, 5, 3, -3.0243, 1e-3, 'c'},
        {5, 7, 4, -3.3848, 1e-3, 'b'},     {5, 3, 7, 3.4462, 1e-3, 'e'},
    };
    return rows;
}

} // namespace pellipse::figures
