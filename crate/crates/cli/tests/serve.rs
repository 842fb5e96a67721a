use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use logiseed_cli::commands::{place_request, render_place};
use logiseed_cli::server::{app, bind};
use logiseed_cli::{PlaceArgs, SeedArgs};
use tokio::io::{AsyncReadExt, AsyncWriteExt};
use tower::ServiceExt;

const MAX: usize = 1_000_000;

async fn get(uri: &str) -> (StatusCode, String) {
    let res = app(MAX)
        .oneshot(Request::get(uri).body(Body::empty()).unwrap())
        .await
        .unwrap();
    let status = res.status();
    let bytes = res.into_body().collect().await.unwrap().to_bytes();
    (status, String::from_utf8(bytes.to_vec()).unwrap())
}

#[tokio::test]
async fn health() {
    assert_eq!(get("/api/health").await, (StatusCode::OK, "ok".to_string()));
}

#[tokio::test]
async fn placements_are_repeatable() {
    let uri = "/api/placements?x0=0.25&r=3.99&width=20&height=20&mode=competition&count=50";
    let (s1, b1) = get(uri).await;
    let (s2, b2) = get(uri).await;
    assert_eq!(s2, StatusCode::OK);
    assert_eq!(s1, StatusCode::OK);
    assert_eq!(b1, b2);
    let v: serde_json::Value = serde_json::from_str(&b1).unwrap();
    assert_eq!(v["coords"].as_array().unwrap().len(), 50);
}

#[tokio::test]
async fn invalid_x0_is_400() {
    let (status, body) = get("/api/placements?x0=2").await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(body, r#"{"error":"x0 out of (0,1)"}"#);
    let (status, body) = get("/api/placements?x0=0.25&r=3.99&width=0&height=3").await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert!(body.starts_with(r#"{"error":"#));
}

#[tokio::test]
async fn matches_cli_rendering() {
    let args = PlaceArgs {
        seed: SeedArgs {
            x0: "0.123".into(),
            r: "3.97".into(),
        },
        width: 7,
        height: 9,
        mode: logiseed::Mode::Competition,
        count: Some(12),
        burn_in: 50,
        out: None,
    };
    let cli = render_place(&place_request(&args, MAX).unwrap(), &mut logiseed::OsNoise).unwrap();
    let (_, body) =
        get("/api/placements?x0=0.123&r=3.97&width=7&height=9&mode=competition&count=12").await;
    assert_eq!(body.as_bytes(), cli.as_bytes());
}

#[tokio::test]
async fn real_socket_round_trip_and_port_conflict() {
    let listener = bind("127.0.0.1", 0).await.unwrap();
    let port = listener.local_addr().unwrap().port();
    tokio::spawn(async move { axum::serve(listener, app(MAX)).await.unwrap() });

    let err = bind("127.0.0.1", port).await.unwrap_err();
    assert_eq!(err.exit_code(), 3);

    let mut stream = tokio::net::TcpStream::connect(("127.0.0.1", port))
        .await
        .unwrap();
    stream
        .write_all(b"GET /api/health HTTP/1.1\r\nHost: localhost\r\nConnection: close\r\n\r\n")
        .await
        .unwrap();
    let mut response = String::new();
    stream.read_to_string(&mut response).await.unwrap();
    assert!(response.starts_with("HTTP/1.1 200"), "{response}");
    assert!(response.ends_with("ok"));
}
