package com.acme.util;

public enum Color {
    RED,
    GREEN("g") {
        @Override
        public String code() { return "G"; }
    };

    private final String code;

    Color() { this("r"); }

    Color(String code) { this.code = code; }

    public String code() { return code; }
}
