#include "priorlens/ingest/grobid_client.hpp"

#include "priorlens/common/errors.hpp"

namespace priorlens {

namespace {
// Fixed boundary keeps the multipart body, and therefore the request
// digest, stable across runs.
constexpr const char* kBoundary = "----priorlens-multipart";
} // namespace

GrobidClient::GrobidClient(std::shared_ptr<Transport> transport, std::string base_url)
    : transport_(std::move(transport)), base_url_(std::move(base_url)) {
    while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
}

std::string GrobidClient::process_fulltext(const std::string& pdf_bytes) {
    if (pdf_bytes.empty()) raise(ErrorKind::ParseFailed, "empty PDF input");

    std::string body;
    body += "--";
    body += kBoundary;
    body += "\r\nContent-Disposition: form-data; name=\"input\"; filename=\"submission.pdf\"\r\n";
    body += "Content-Type: application/pdf\r\n\r\n";
    body += pdf_bytes;
    body += "\r\n--";
    body += kBoundary;
    body += "--\r\n";

    HttpRequest req;
    req.method = "POST";
    req.url = base_url_ + "/api/processFulltextDocument";
    req.body = std::move(body);
    req.content_type = std::string("multipart/form-data; boundary=") + kBoundary;

    HttpResponse resp;
    try {
        resp = transport_->send(req);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::FixtureMiss) throw;
        raise(ErrorKind::ParseFailed, std::string("structure-extraction service failed: ") + e.what());
    }
    if (resp.status < 200 || resp.status >= 300)
        raise(ErrorKind::ParseFailed,
              "structure-extraction service returned status " + std::to_string(resp.status));
    if (resp.body.empty()) raise(ErrorKind::ParseFailed, "structure-extraction service returned no TEI");
    return resp.body;
}

TeiParseResult parse_submission(const std::string& pdf_bytes, const Date& submission_date,
                                GrobidClient& client) {
    return parse_tei(client.process_fulltext(pdf_bytes), submission_date);
}

} // namespace priorlens
