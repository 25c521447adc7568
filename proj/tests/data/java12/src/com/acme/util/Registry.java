package com.acme.util;

import java.util.HashMap;
import java.util.Map;
import com.acme.core.Shape;

public class Registry<T extends Shape> {
    private final Map<String, T> items = new HashMap<>();

    public void add(String key, T item) {
        items.put(key, item);
    }

    public T get(String key) {
        return items.get(key);
    }

    public <S extends T> S first(Class<S> type) {
        return null;
    }

    public Iterable<Entry<T>> entries() {
        return null;
    }

    public static class Entry<E> {
        E value;
    }
}
