#pragma once

#include <memory>
#include <string>

#include "priorlens/gateway/transport.hpp"
#include "priorlens/ingest/tei.hpp"

namespace priorlens {

// Client for a GROBID-compatible structure-extraction service: multipart PDF
// upload to processFulltextDocument, TEI XML back.
class GrobidClient {
public:
    GrobidClient(std::shared_ptr<Transport> transport, std::string base_url);

    // Returns the TEI document. Throws ParseFailed on service failure or an
    // unreadable PDF.
    std::string process_fulltext(const std::string& pdf_bytes);

private:
    std::shared_ptr<Transport> transport_;
    std::string base_url_;
};

// Stage 1 entry point: PDF bytes to structured submission content.
TeiParseResult parse_submission(const std::string& pdf_bytes, const Date& submission_date,
                                GrobidClient& client);

} // namespace priorlens
