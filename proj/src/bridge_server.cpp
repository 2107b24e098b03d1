#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include <mutex>
#include <sstream>
#include <vector>

#include "lcgeo/bridge.hpp"

namespace lcgeo {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

namespace {

std::string trim_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

void serve_lines(tcp::socket socket) {
    SessionState state;
    asio::streambuf buf;
    boost::system::error_code ec;
    for (;;) {
        asio::read_until(socket, buf, '\n', ec);
        if (ec) return;
        std::istream in(&buf);
        std::string line;
        std::getline(in, line);
        line = trim_cr(std::move(line));
        if (line.empty()) continue;
        std::string reply = handle_line(line, state) + "\n";
        asio::write(socket, asio::buffer(reply), ec);
        if (ec) return;
    }
}

void serve_websocket(tcp::socket socket) {
    SessionState state;
    websocket::stream<tcp::socket> ws(std::move(socket));
    boost::system::error_code ec;
    ws.accept(ec);
    if (ec) return;
    ws.text(true);
    for (;;) {
        beast::flat_buffer buf;
        ws.read(buf, ec);
        if (ec) return;
        // A message may carry several newline-separated frames.
        std::istringstream in(beast::buffers_to_string(buf.data()));
        std::string line;
        while (std::getline(in, line)) {
            line = trim_cr(std::move(line));
            if (line.empty()) continue;
            std::string reply = handle_line(line, state) + "\n";
            ws.write(asio::buffer(reply), ec);
            if (ec) return;
        }
    }
}

}  // namespace

struct BridgeServer::Impl {
    asio::io_context io;
    tcp::acceptor lines{io};
    std::optional<tcp::acceptor> ws;
    std::thread background;
    std::mutex mu;
    std::vector<std::thread> sessions;
    unsigned short tcp_port = 0;
    unsigned short ws_port = 0;

    void listen(tcp::acceptor& acc, unsigned short port) {
        tcp::endpoint ep(asio::ip::make_address("127.0.0.1"), port);
        acc.open(ep.protocol());
        acc.set_option(asio::socket_base::reuse_address(true));
        acc.bind(ep);
        acc.listen();
    }

    template <class Serve>
    void accept(tcp::acceptor& acc, Serve serve) {
        acc.async_accept([this, &acc, serve](boost::system::error_code ec, tcp::socket socket) {
            if (ec) return;
            {
                std::lock_guard lock(mu);
                sessions.emplace_back([s = std::move(socket), serve]() mutable { serve(std::move(s)); });
            }
            accept(acc, serve);
        });
    }
};

BridgeServer::BridgeServer(unsigned short tcp_port, std::optional<unsigned short> ws_port) : impl_(new Impl) {
    impl_->listen(impl_->lines, tcp_port);
    impl_->accept(impl_->lines, serve_lines);
    impl_->tcp_port = impl_->lines.local_endpoint().port();
    if (ws_port) {
        impl_->ws.emplace(impl_->io);
        impl_->listen(*impl_->ws, *ws_port);
        impl_->accept(*impl_->ws, serve_websocket);
        impl_->ws_port = impl_->ws->local_endpoint().port();
    }
}

BridgeServer::~BridgeServer() {
    stop();
    if (impl_->background.joinable()) impl_->background.join();
    boost::system::error_code ec;
    impl_->lines.close(ec);
    if (impl_->ws) impl_->ws->close(ec);
    std::lock_guard lock(impl_->mu);
    for (auto& t : impl_->sessions) t.detach();
}

unsigned short BridgeServer::tcp_port() const { return impl_->tcp_port; }

unsigned short BridgeServer::ws_port() const { return impl_->ws_port; }

void BridgeServer::run() { impl_->io.run(); }

void BridgeServer::start() {
    impl_->background = std::thread([this] { impl_->io.run(); });
}

void BridgeServer::stop() { impl_->io.stop(); }

}  // namespace lcgeo
