package com.acme.core;

public class Vector {
    double dx;
    double dy = 0.0;

    public static Vector of(Point a, Point b) {
        Vector v = new Vector();
        return v;
    }
}
