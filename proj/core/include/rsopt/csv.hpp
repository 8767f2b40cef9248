#ifndef RSOPT_CSV_HPP
#define RSOPT_CSV_HPP

#include <fstream>
#include <string>
#include <vector>

namespace rsopt {

/// %.17g — enough digits to round-trip an IEEE double exactly, so artifacts
/// written twice from the same run are bit-identical.
std::string format_double(double v);

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void row(const std::vector<std::string>& cells);
    void row(const std::vector<double>& cells);

private:
    std::ofstream out_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path);

} // namespace rsopt

#endif
