#ifndef THOMPSON_NET_HPP
#define THOMPSON_NET_HPP

#include <cstdint>
#include <utility>

#include "thompson/wire.hpp"

namespace thompson {

struct NetError : Error {
  using Error::Error;
};

/// Blocking line-oriented stream over a file descriptor (owns it).
class FdStream : public LineStream {
public:
  explicit FdStream(int fd) : fd_(fd) {}
  ~FdStream() override;

  FdStream(FdStream&& other) noexcept;
  FdStream& operator=(FdStream&& other) noexcept;
  FdStream(const FdStream&) = delete;
  FdStream& operator=(const FdStream&) = delete;

  bool read_line(std::string& out) override;
  void write_line(std::string_view line) override;

private:
  int fd_ = -1;
  std::string buffer_;
};

class TcpListener {
public:
  /// Binds 0.0.0.0:port; port 0 picks an ephemeral port.
  static TcpListener bind_port(std::uint16_t port);
  ~TcpListener();

  TcpListener(TcpListener&& other) noexcept;
  TcpListener& operator=(TcpListener&& other) noexcept;
  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;

  std::uint16_t port() const { return port_; }
  FdStream accept_one();

private:
  TcpListener() = default;
  int fd_ = -1;
  std::uint16_t port_ = 0;
};

FdStream tcp_connect(const std::string& host, std::uint16_t port);

/// Connected socket pair for in-process tests.
std::pair<FdStream, FdStream> local_stream_pair();

}  // namespace thompson

#endif
